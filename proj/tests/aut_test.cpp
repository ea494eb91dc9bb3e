#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dh/aut.hpp"
#include "dh/dhspace.hpp"
#include "dh/rng.hpp"
#include "test_util.hpp"

using namespace dh;
using namespace dhtest;

namespace {

Point mk(Chart chart, Complex lambda, Complex u, Complex v) {
  Point p;
  p.chart = chart;
  p.lambda = lambda;
  p.u = cvec1(u);
  p.v = cvec1(v);
  return p;
}

Point random_point(Sampler& rng, int g, bool nonzero = false) {
  Point p;
  p.chart = rng.unit() < 0.5 ? Chart::X : Chart::Xbar;
  p.lambda = nonzero ? rng.annulus() : (rng.unit() < 0.2 ? Complex(0, 0) : rng.annulus());
  p.u = rng.cvec(g);
  p.v = rng.cvec(g);
  return p;
}

Aut0 random_aut0(const Surface& s, Sampler& rng) {
  return make_aut0(s, DeRhamPoint{rng.cvec(s.genus()), rng.cvec(s.genus())},
                   rng.cvec(s.genus()), rng.cvec(s.genus()), rng.annulus());
}

VPoly poly1(int g, std::initializer_list<Vec> coeffs) {
  VPoly w;
  w.g = g;
  for (const Vec& c : coeffs) w.coeffs.push_back(c);
  return w;
}

}  // namespace

TEST_CASE("vertical polynomial basics") {
  VPoly w = poly1(1, {cvec1(Complex(1, 0)), cvec1(Complex(0, 2)), cvec1(Complex(0, 0))});
  w.trim();
  CHECK(w.degree() == 1);
  CHECK(std::abs(w.eval(Complex(3, 0))[0] - Complex(1, 6)) < 1e-15);
  VPoly zero;
  zero.g = 1;
  CHECK(zero.degree() == -1);
  CHECK(std::abs(zero.eval(Complex(2, 0))[0]) == 0.0);
}

TEST_CASE("vertical shear fixes the Higgs fiber pointwise when w(0) = 0") {
  const VPoly w = poly1(1, {cvec1(Complex(0, 0)), cvec1(Complex(1, 0))});  // w(l) = l*omega
  const Point p0 = mk(Chart::X, Complex(0, 0), Complex(0.1, 0.2), Complex(0.3, 0));
  const Point q0 = iota_apply(w, p0);
  CHECK(sup(q0.u - p0.u) == 0.0);
  CHECK(sup(q0.v - p0.v) == 0.0);

  const Point p2 = mk(Chart::X, Complex(2, 0), Complex(0.1, 0), Complex(0.3, 0));
  CHECK(std::abs(iota_apply(w, p2).v[0] - Complex(2.3, 0)) < 1e-15);

  CHECK_THROWS_AS(iota_apply(w, mk(Chart::Xbar, Complex(1, 0), 0, 0)), ChartMismatch);
}

TEST_CASE("tensoring shifts u only over lambda = 0") {
  const Surface s = surface_g1(kI);
  const DeRhamPoint t = make_de_rham(s, cvec1(Complex(0.2, 0.1)), cvec1(Complex(0.4, 0)));
  const Point p = mk(Chart::X, Complex(0, 0), Complex(0.1, 0), Complex(0.3, 0));
  const Point q = tensor_apply(s, t, p);
  CHECK(std::abs(q.u[0] - Complex(0.3, 0.1)) < 1e-13);
  CHECK(std::abs(q.v[0] - Complex(0.3, 0)) < 1e-13);

  const Point p1 = mk(Chart::X, Complex(1, 0), Complex(0.1, 0), Complex(0.3, 0));
  const Point q1 = tensor_apply(s, t, p1);
  CHECK(std::abs(q1.u[0] - Complex(0.3, 0.1)) < 1e-13);
  CHECK(std::abs(q1.v[0] - Complex(0.7, 0)) < 1e-13);
}

TEST_CASE("scaling acts on the fiber coordinate and the connection part") {
  const Surface s = surface_g1(kI);
  const Point p = mk(Chart::X, Complex(0.5, 0), Complex(0.1, 0), Complex(0.3, 0));
  const Point q = scale_apply(s, Complex(0, 2), p);
  CHECK(std::abs(q.lambda - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(q.u[0] - Complex(0.1, 0)) < 1e-15);
  CHECK(std::abs(q.v[0] - Complex(0, 0.6)) < 1e-15);

  // The Higgs fiber is preserved setwise.
  const Point h = scale_apply(s, Complex(3, 0), mk(Chart::X, Complex(0, 0), 0.1, 0.2));
  CHECK(h.lambda == Complex(0, 0));
  CHECK(std::abs(h.v[0] - Complex(0.6, 0)) < 1e-15);

  CHECK_THROWS_AS(scale_apply(s, Complex(0, 0), p), ZeroScale);
}

TEST_CASE("composition in the fixed factorization") {
  const Surface s = surface_g1(kI);
  Sampler rng(43);

  // Frozen shear recombination: a = pure scale 2, b = pure shear l -> l*e1.
  const Vec zero = Vec::Zero(1);
  const HodgeAut a = make_hodge_aut(s, VPoly{1, {}}, DeRhamPoint{zero, zero}, Complex(2, 0));
  const HodgeAut b =
      make_hodge_aut(s, poly1(1, {cvec1(Complex(0, 0)), cvec1(Complex(1, 0))}),
                     DeRhamPoint{zero, zero}, Complex(1, 0));
  const HodgeAut ab = hodge_aut_compose(s, a, b);
  CHECK(ab.w.degree() == 1);
  CHECK(std::abs(ab.w.coeffs[1][0] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(ab.scale - Complex(2, 0)) < 1e-15);

  const HodgeAut c = make_hodge_aut(s, poly1(1, {cvec1(Complex(1, 0))}),
                                    DeRhamPoint{zero, zero}, Complex(1, 0));
  const HodgeAut bc = hodge_aut_compose(s, c, a);  // shear after scale
  CHECK(std::abs(bc.w.coeffs[0][0] - Complex(1, 0)) < 1e-15);
  const HodgeAut cb = hodge_aut_compose(s, a, c);  // scale after shear
  CHECK(std::abs(cb.w.coeffs[0][0] - Complex(2, 0)) < 1e-15);

  for (int t = 0; t < 100; ++t) {
    VPoly w1;
    w1.g = 1;
    for (int k = 0; k <= int(rng.integer(0, 3)); ++k) w1.coeffs.push_back(rng.cvec(1));
    VPoly w2;
    w2.g = 1;
    for (int k = 0; k <= int(rng.integer(0, 3)); ++k) w2.coeffs.push_back(rng.cvec(1));
    const HodgeAut t1 =
        make_hodge_aut(s, w1, DeRhamPoint{rng.cvec(1), rng.cvec(1)}, rng.annulus());
    const HodgeAut t2 =
        make_hodge_aut(s, w2, DeRhamPoint{rng.cvec(1), rng.cvec(1)}, rng.annulus());
    Point p = random_point(rng, 1);
    p.chart = Chart::X;
    const Point lhs = hodge_aut_apply(s, hodge_aut_compose(s, t1, t2), p);
    const Point rhs = hodge_aut_apply(s, t1, hodge_aut_apply(s, t2, p));
    CHECK(lhs.chart == rhs.chart);
    CHECK(std::abs(lhs.lambda - rhs.lambda) < 1e-9);
    CHECK(gauge_equal(s, lhs, rhs, 1e-9));
  }
}

TEST_CASE("quotient homomorphism h") {
  const Surface s = surface_g1(kI);
  const Vec zero = Vec::Zero(1);

  const HodgeAut pure_scale =
      make_hodge_aut(s, VPoly{1, {}}, DeRhamPoint{zero, zero}, Complex(0, 5));
  const HMapValue hs = h_map(s, pure_scale);
  CHECK(sup(hs.pic_class) < 1e-13);
  CHECK(std::abs(hs.scale - Complex(0, 5)) < 1e-15);

  const HodgeAut pure_tensor = make_hodge_aut(
      s, VPoly{1, {}}, DeRhamPoint{cvec1(Complex(0, 0.3)), zero}, Complex(1, 0));
  const HMapValue ht = h_map(s, pure_tensor);
  CHECK(std::abs(ht.pic_class[0] - Complex(0, 0.3)) < 1e-13);

  // Lattice-trivial tensor classes land in the kernel.
  const HodgeAut kernel = make_hodge_aut(
      s, poly1(1, {cvec1(Complex(0.5, 0.5))}),
      DeRhamPoint{s.lattice_01_part(ivec({1, 1})), cvec1(Complex(0.7, 0))}, Complex(1, 0));
  const HMapValue hk = h_map(s, kernel);
  CHECK(sup(hk.pic_class) < 1e-12);
  CHECK(std::abs(hk.scale - Complex(1, 0)) < 1e-15);

  // And are recovered as vertical shears by interpolation.
  std::vector<Complex> lambdas;
  std::vector<Vec> deltas;
  Point base;
  base.chart = Chart::X;
  base.u = cvec1(Complex(0.05, 0.02));
  base.v = cvec1(Complex(0.3, -0.2));
  for (int k = 0; k < 5; ++k) {
    const Complex lam = std::polar(1.0, 2.0 * kPi * k / 5);
    base.lambda = lam;
    lambdas.push_back(lam);
    deltas.push_back(Vec(hodge_aut_apply(s, kernel, base).v - base.v));
  }
  const VPoly fitted = interpolate_vpoly(1, lambdas, deltas, 1e-10);
  Sampler rng(47);
  for (int t = 0; t < 50; ++t) {
    Point p = random_point(rng, 1);
    p.chart = Chart::X;
    CHECK(gauge_equal(s, iota_apply(fitted, p), hodge_aut_apply(s, kernel, p), 1e-9));
  }

  // Multiplicativity.
  for (int t = 0; t < 100; ++t) {
    const HodgeAut t1 = make_hodge_aut(s, VPoly{1, {}},
                                       DeRhamPoint{rng.cvec(1), rng.cvec(1)}, rng.annulus());
    const HodgeAut t2 = make_hodge_aut(s, VPoly{1, {}},
                                       DeRhamPoint{rng.cvec(1), rng.cvec(1)}, rng.annulus());
    const HMapValue h12 = h_map(s, hodge_aut_compose(s, t1, t2));
    auto [pic, n] = s.reduce_mod_lattice(t1.tensor.u + t2.tensor.u);
    (void)n;
    CHECK(sup(h12.pic_class - pic) < 1e-9);
    CHECK(std::abs(h12.scale - t1.scale * t2.scale) < 1e-13);
  }
}

TEST_CASE("twistor automorphism group law") {
  const Surface s = surface_g1(kI);

  // Frozen inverse.
  const Aut0 a = make_aut0(s, DeRhamPoint{cvec1(Complex(0.1, 0)), cvec1(Complex(0, 0.2))},
                           cvec1(Complex(0.3, 0)), cvec1(Complex(0.4, 0)), Complex(2, 0));
  const Aut0 inv = aut0_inverse(s, a);
  CHECK(std::abs(inv.tau - Complex(0.5, 0)) < 1e-15);
  CHECK(std::abs(inv.alpha[0] + Complex(0.15, 0)) < 1e-15);
  CHECK(std::abs(inv.eta_bar[0] + Complex(0.8, 0)) < 1e-15);
  CHECK(std::abs(inv.nabla.u[0] + Complex(0.1, 0)) < 1e-13);
  CHECK(std::abs(inv.nabla.v[0] + Complex(0, 0.2)) < 1e-13);

  Sampler rng(53);
  const Aut0 id = aut0_identity(s);
  for (int t = 0; t < 200; ++t) {
    const Aut0 x = random_aut0(s, rng);
    const Aut0 y = random_aut0(s, rng);
    const Aut0 z = random_aut0(s, rng);

    const Aut0 xy = aut0_compose(s, x, y);
    CHECK(sup(xy.alpha - (x.alpha + x.tau * y.alpha)) < 1e-12);
    CHECK(sup(xy.eta_bar - (x.eta_bar + y.eta_bar / x.tau)) < 1e-12);
    CHECK(std::abs(xy.tau - x.tau * y.tau) < 1e-12);

    const Aut0 l = aut0_compose(s, aut0_compose(s, x, y), z);
    const Aut0 r = aut0_compose(s, x, aut0_compose(s, y, z));
    CHECK(sup(l.alpha - r.alpha) < 1e-12);
    CHECK(sup(l.eta_bar - r.eta_bar) < 1e-12);
    CHECK(std::abs(l.tau - r.tau) < 1e-12);
    CHECK(sup(l.nabla.u - r.nabla.u) < 1e-12);
    CHECK(sup(l.nabla.v - r.nabla.v) < 1e-12);

    const Aut0 xi = aut0_compose(s, x, aut0_inverse(s, x));
    CHECK(sup(xi.alpha - id.alpha) < 1e-12);
    CHECK(sup(xi.eta_bar - id.eta_bar) < 1e-12);
    CHECK(std::abs(xi.tau - id.tau) < 1e-12);
    CHECK(sup(xi.nabla.u) < 1e-12);
    CHECK(sup(xi.nabla.v) < 1e-12);
  }

  CHECK_THROWS_AS(make_aut0(s, DeRhamPoint{cvec1(0), cvec1(0)}, cvec1(0), cvec1(0),
                            Complex(0, 0)),
                  ZeroScale);
}

TEST_CASE("twistor automorphism action") {
  const Surface s = surface_g1(kI);
  const Vec zero = Vec::Zero(1);

  // Pure scaling tau = 2.
  const Aut0 sc = make_aut0(s, DeRhamPoint{zero, zero}, zero, zero, Complex(2, 0));
  const Point p = mk(Chart::X, Complex(1, 0), Complex(0.1, 0), Complex(0.3, 0));
  const Point q = aut0_apply(s, sc, p);
  CHECK(std::abs(q.lambda - Complex(2, 0)) < 1e-15);
  CHECK(std::abs(q.u[0] - Complex(0.1, 0)) < 1e-13);
  CHECK(std::abs(q.v[0] - Complex(0.6, 0)) < 1e-13);

  // alpha shifts the connection form at every lambda, eta_bar moves u by
  // tau * lambda * eta_bar; mirrored on the conjugate chart.
  const Aut0 al = make_aut0(s, DeRhamPoint{zero, zero}, cvec1(Complex(0.3, 0)), zero,
                            Complex(1, 0));
  const Point qa = aut0_apply(s, al, p);
  CHECK(std::abs(qa.u[0] - p.u[0]) < 1e-13);
  CHECK(std::abs(qa.v[0] - Complex(0.6, 0)) < 1e-13);

  const Aut0 et = make_aut0(s, DeRhamPoint{zero, zero}, zero, cvec1(Complex(0.2, 0)),
                            Complex(1, 0));
  const Point qe = aut0_apply(s, et, p);
  CHECK(std::abs(qe.u[0] - Complex(0.3, 0)) < 1e-13);
  CHECK(std::abs(qe.v[0] - p.v[0]) < 1e-13);
  const Point pbar = mk(Chart::Xbar, Complex(0, 0), Complex(0.1, 0), Complex(0.3, 0));
  const Point qebar = aut0_apply(s, et, pbar);
  CHECK(std::abs(qebar.u[0] - pbar.u[0]) < 1e-13);
  CHECK(std::abs(qebar.v[0] - Complex(0.5, 0)) < 1e-13);

  // The gauge-shear family fixes f^0 and f^inf pointwise and shifts v by
  // lambda * gamma' elsewhere.
  const Aut0 shear = make_aut0(
      s, DeRhamPoint{zero, s.lattice_10_part(ivec({1, 0}))}, zero, zero, Complex(1, 0));
  const Point at1 = aut0_apply(s, shear, mk(Chart::X, Complex(1, 0), 0, 0));
  CHECK(std::abs(at1.v[0] - kPi * kI) < 1e-12);
  Sampler rng(59);
  for (int t = 0; t < 100; ++t) {
    Point f0 = random_point(rng, 1);
    f0.chart = Chart::X;
    f0.lambda = Complex(0, 0);
    CHECK(points_equal(s, aut0_apply(s, shear, f0), f0, 1e-9));
    Point finf = random_point(rng, 1);
    finf.chart = Chart::Xbar;
    finf.lambda = Complex(0, 0);
    CHECK(points_equal(s, aut0_apply(s, shear, finf), finf, 1e-9));
  }

  // Composition compatibility of the action, across charts.
  for (int t = 0; t < 200; ++t) {
    const Aut0 x = random_aut0(s, rng);
    const Aut0 y = random_aut0(s, rng);
    const Point pt = random_point(rng, 1);
    const Point lhs = aut0_apply(s, aut0_compose(s, x, y), pt);
    const Point rhs = aut0_apply(s, x, aut0_apply(s, y, pt));
    CHECK(lhs.chart == rhs.chart);
    CHECK(std::abs(lhs.lambda - rhs.lambda) < 1e-9);
    CHECK(gauge_equal(s, lhs, rhs, 1e-9));

    // The fiber transforms by multiplication by tau.
    const CP1 z = fiber(pt);
    const CP1 w = fiber(rhs);
    if (!z.is_infinity()) {
      REQUIRE_FALSE(w.is_infinity());
      const Complex expect = x.tau * y.tau * z.value();
      CHECK(std::abs(w.value() - expect) <=
            1e-9 * std::max({1.0, std::abs(w.value()), std::abs(expect)}));
    } else {
      CHECK(w.is_infinity());
    }
  }
}

TEST_CASE("duality involution and conjugation") {
  const Surface s = surface_g1(kI);
  const Gamma dual = make_duality();

  const Point h = mk(Chart::X, Complex(0, 0), Complex(0.1, 0.1), Complex(0.2, 0));
  const Point hd = gamma_apply(s, dual, h);
  CHECK(std::abs(hd.u[0] + h.u[0]) < 1e-13);
  CHECK(std::abs(hd.v[0] + h.v[0]) < 1e-13);
  CHECK(fixes_theta(dual));
  CHECK(pullback_theta(dual) == 1);

  Sampler rng(61);
  for (int t = 0; t < 100; ++t) {
    const Point p = random_point(rng, 1);
    CHECK(points_equal(s, gamma_apply(s, dual, gamma_apply(s, dual, p)), p, 1e-9));

    const Aut0 a = random_aut0(s, rng);
    const Aut0 conj = make_aut0(s, DeRhamPoint{Vec(-a.nabla.u), Vec(-a.nabla.v)},
                                Vec(-a.alpha), Vec(-a.eta_bar), a.tau);
    const Point lhs = gamma_apply(s, dual, aut0_apply(s, a, gamma_apply(s, dual, p)));
    const Point rhs = aut0_apply(s, conj, p);
    CHECK(points_equal(s, lhs, rhs, 1e-9));
  }
}

TEST_CASE("lattice automorphisms, tau = i") {
  const Surface s = surface_g1(kI);

  // Multiplication by i on the square lattice.
  const Gamma multi = make_lattice_map(s, imat(2, {0, -1, 1, 0}), false);
  CHECK(multi.kind == GammaKind::Lattice);
  CHECK(std::abs(multi.action(0, 0) - kI) < 1e-12);
  CHECK(pullback_theta(multi) == 1);
  CHECK(fixes_theta(multi));

  const Point p = mk(Chart::X, Complex(0.7, 0), Complex(0.1, 0), Complex(0.2, 0));
  const Point q = gamma_apply(s, multi, p);
  CHECK(std::abs(q.lambda - p.lambda) < 1e-15);
  CHECK(std::abs(q.u[0] - Complex(0, -0.1)) < 1e-12);
  CHECK(std::abs(q.v[0] - Complex(0, 0.2)) < 1e-12);

  // The action descends to gauge classes.
  Sampler rng(67);
  for (int t = 0; t < 100; ++t) {
    const Point r = random_point(rng, 1);
    const IVec n = rng.ivec(2, -2, 2);
    CHECK(points_equal(s, gamma_apply(s, multi, gauge_shift(s, r, n)),
                       gamma_apply(s, multi, r), 1e-9));
  }

  // -1 on the lattice is the pullback form of duality's lattice shadow.
  const Gamma neg = make_lattice_map(s, imat(2, {-1, 0, 0, -1}), false);
  CHECK(pullback_theta(neg) == 1);

  // Non-endomorphisms and non-unimodular maps are rejected.
  CHECK_THROWS_AS(make_lattice_map(s, imat(2, {2, 0, 0, 1}), false), IncompatibleMatrix);
  const Surface s2 = surface_g1(Complex(0, 2));
  CHECK_THROWS_AS(make_lattice_map(s2, imat(2, {0, -1, 1, 0}), false), IncompatibleMatrix);
}

TEST_CASE("chart-swapping lattice maps") {
  const Surface s = surface_g1(kI);
  const Gamma swap = make_lattice_map(s, imat(2, {1, 0, 0, -1}), true);
  CHECK(swap.kind == GammaKind::LatticeSwap);
  CHECK(std::abs(swap.action(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(pullback_theta(swap) == -1);
  CHECK_FALSE(fixes_theta(swap));

  // Covers z -> 1/z on the base.
  const Point p = mk(Chart::X, Complex(2, 0), Complex(0.1, 0), Complex(0.2, 0));
  const Point q = gamma_apply(s, swap, p);
  CHECK(q.chart == Chart::Xbar);
  CHECK(std::abs(q.lambda - Complex(2, 0)) < 1e-15);
  CHECK(std::abs(fiber(q).value() - Complex(0.5, 0)) < 1e-15);
  CHECK(std::abs(q.u[0] - Complex(0.1, 0)) < 1e-12);
  CHECK(std::abs(q.v[0] - Complex(0.2, 0)) < 1e-12);

  // The same integer matrix is not a swap for a non-symmetric lattice.
  const Surface s3 = surface_g1(Complex(0.3, 1.0));
  CHECK_THROWS_AS(make_lattice_map(s3, imat(2, {1, 0, 0, -1}), true), IncompatibleMatrix);
}

TEST_CASE("theta classification in exact arithmetic") {
  // Compatible but non-symplectic: block shear on the square of a curve.
  const Surface s = surface_diag({kI, kI});
  const IMat m = imat(4, {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1});
  const Gamma shear = make_lattice_map(s, m, false);
  CHECK(shear.kind == GammaKind::Lattice);
  CHECK_THROWS_AS(pullback_theta(shear), NotThetaScaling);
  CHECK_FALSE(fixes_theta(shear));
}

TEST_CASE("hodge automorphisms act on chart X only") {
  const Surface s = surface_g1(kI);
  const Vec zero = Vec::Zero(1);
  const HodgeAut t = make_hodge_aut(s, VPoly{1, {}}, DeRhamPoint{zero, zero}, Complex(2, 0));
  CHECK_THROWS_AS(hodge_aut_apply(s, t, mk(Chart::Xbar, Complex(1, 0), 0, 0)), ChartMismatch);
}

TEST_CASE("interpolation recovers polynomial data") {
  VPoly w = poly1(2, {cvec2(Complex(1, 0), Complex(0, 1)), cvec2(Complex(0, 0), Complex(2, 0)),
                      cvec2(Complex(-1, 0.5), Complex(0, 0))});
  std::vector<Complex> lambdas;
  std::vector<Vec> values;
  for (int k = 0; k < 5; ++k) {
    const Complex lam = std::polar(1.3, 2.0 * kPi * k / 5);
    lambdas.push_back(lam);
    values.push_back(w.eval(lam));
  }
  const VPoly fit = interpolate_vpoly(2, lambdas, values, 1e-10);
  REQUIRE(fit.degree() == 2);
  for (int k = 0; k <= 2; ++k) CHECK(sup(fit.coeffs[k] - w.coeffs[k]) < 1e-12);
}
