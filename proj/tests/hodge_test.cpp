#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dh/hodge.hpp"
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

Point random_point(Sampler& rng, int g, bool nonzero) {
  Point p;
  p.chart = rng.unit() < 0.5 ? Chart::X : Chart::Xbar;
  p.lambda = nonzero ? rng.annulus() : (rng.unit() < 0.2 ? Complex(0, 0) : rng.annulus());
  p.u = rng.cvec(g);
  p.v = rng.cvec(g);
  return p;
}

}  // namespace

TEST_CASE("fiber map") {
  CHECK_FALSE(fiber(mk(Chart::X, Complex(0, 0), 0, 0)).is_infinity());
  CHECK(fiber(mk(Chart::X, Complex(2, 1), 0, 0)).value() == Complex(2, 1));
  CHECK(fiber(mk(Chart::Xbar, Complex(0, 0), 0, 0)).is_infinity());
  CHECK(std::abs(fiber(mk(Chart::Xbar, Complex(0, 2), 0, 0)).value() - Complex(0, -0.5)) < 1e-15);
}

TEST_CASE("normal form, chart X, tau = i") {
  const Surface s = surface_g1(kI);

  // u = pi*i is the (0,1)-part of the lattice point e_1; removing it costs v
  // a shift by -lambda * (pi*i).
  const Point q = normal_form(s, mk(Chart::X, Complex(1, 0), kPi * kI, 0));
  CHECK(std::abs(q.u[0]) < 1e-12);
  CHECK(std::abs(q.v[0] + kPi * kI) < 1e-12);

  // On the Higgs fiber v is untouched.
  const Point h = normal_form(s, mk(Chart::X, Complex(0, 0), Complex(-kPi, kPi), Complex(5, 0)));
  CHECK(std::abs(h.u[0]) < 1e-12);
  CHECK(std::abs(h.v[0] - Complex(5, 0)) < 1e-12);

  // Already-reduced points are fixed.
  const Point r = normal_form(s, mk(Chart::X, Complex(2, 1), Complex(0.2, 0.3), Complex(1, 1)));
  CHECK(std::abs(r.u[0] - Complex(0.2, 0.3)) < 1e-12);
  CHECK(std::abs(r.v[0] - Complex(1, 1)) < 1e-12);
}

TEST_CASE("normal form, chart Xbar, tau = i") {
  const Surface s = surface_g1(kI);
  // On Xbar u lives in the (1,0)-lattice; for tau = i its basis is
  // {pi*i, pi}, so u = pi*i reduces to zero with v shifted by -lambda * pi*i.
  const Point q = normal_form(s, mk(Chart::Xbar, Complex(1, 0), kPi * kI, 0));
  CHECK(std::abs(q.u[0]) < 1e-12);
  CHECK(std::abs(q.v[0] + kPi * kI) < 1e-12);
}

TEST_CASE("normal form is gauge invariant") {
  const Surface s = surface_diag({Complex(0.2, 1.0), Complex(0.0, 0.7)});
  Sampler rng(5);
  for (int t = 0; t < 300; ++t) {
    const Point p = random_point(rng, 2, false);
    const IVec n = rng.ivec(4, -3, 3);
    CHECK(gauge_equal(s, gauge_shift(s, p, n), p, 1e-9));
    const Point nf = normal_form(s, p);
    const Point nf2 = normal_form(s, nf);
    CHECK(sup(nf2.u - nf.u) < 1e-12);
    CHECK(sup(nf2.v - nf.v) < 1e-12);
  }
}

TEST_CASE("monodromy frozen values, tau = i") {
  const Surface s = surface_g1(kI);

  // Trivial connection.
  const BettiPoint triv = monodromy(s, mk(Chart::X, Complex(1, 0), 0, 0));
  CHECK(std::abs(triv.rho[0] - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(triv.rho[1] - Complex(1, 0)) < 1e-14);

  // Pure holomorphic form: xi periods are the periods (1, i) of omega.
  const BettiPoint rv = monodromy(s, mk(Chart::X, Complex(1, 0), 0, 1));
  CHECK(std::abs(rv.rho[0] - std::exp(Complex(-1, 0))) < 1e-14);
  CHECK(std::abs(rv.rho[1] - std::exp(Complex(0, -1))) < 1e-14);

  // Pure antiholomorphic form: periods (1, -i) of conj(omega).
  const BettiPoint ru = monodromy(s, mk(Chart::X, Complex(1, 0), 1, 0));
  CHECK(std::abs(ru.rho[0] - std::exp(Complex(-1, 0))) < 1e-14);
  CHECK(std::abs(ru.rho[1] - std::exp(Complex(0, 1))) < 1e-14);

  // Same data on the conjugate chart swaps the roles.
  const BettiPoint rb = monodromy(s, mk(Chart::Xbar, Complex(1, 0), 0, 1));
  CHECK(std::abs(rb.rho[0] - std::exp(Complex(-1, 0))) < 1e-14);
  CHECK(std::abs(rb.rho[1] - std::exp(Complex(0, 1))) < 1e-14);

  CHECK_THROWS_AS(monodromy(s, mk(Chart::X, Complex(0, 0), 1, 1)), ZeroLambda);
}

TEST_CASE("monodromy is a gauge-invariant homomorphism") {
  const Surface s = surface_diag({Complex(0.2, 1.0), Complex(-0.3, 1.5)});
  Sampler rng(17);
  for (int t = 0; t < 200; ++t) {
    const Point p = random_point(rng, 2, true);
    const IVec n = rng.ivec(4, -2, 2);
    const BettiPoint a = monodromy(s, p);
    const BettiPoint b = monodromy(s, gauge_shift(s, p, n));
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(a.rho[k] - b.rho[k]) / std::abs(a.rho[k]) < 1e-9);

    Point q = p;
    q.u = rng.cvec(2);
    q.v = rng.cvec(2);
    Point pq = p;
    pq.u = p.u + q.u;
    pq.v = p.v + q.v;
    const BettiPoint rq = monodromy(s, q);
    const BettiPoint rpq = monodromy(s, pq);
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(rpq.rho[k] - a.rho[k] * rq.rho[k]) / std::abs(rpq.rho[k]) < 1e-9);
  }
}

TEST_CASE("from_betti inverts monodromy") {
  const Surface s = surface_g1(kI);

  // Frozen: rho = (e^{-1}, e^{-i}) over lambda = 1 is the pure (1,0)-point.
  BettiPoint b{cvec2(std::exp(Complex(-1, 0)), std::exp(Complex(0, -1)))};
  const Point p = from_betti(s, b, Chart::X, Complex(1, 0));
  CHECK(std::abs(p.u[0]) < 1e-13);
  CHECK(std::abs(p.v[0] - Complex(1, 0)) < 1e-13);

  // Principal branch: rho = (i, 1) has xi = (-i*pi/2, 0), splitting evenly.
  BettiPoint quarter{cvec2(kI, Complex(1, 0))};
  const Point ph = from_betti(s, quarter, Chart::X, Complex(1, 0));
  CHECK(std::abs(ph.u[0] + kPi * kI / 4.0) < 1e-13);
  CHECK(std::abs(ph.v[0] + kPi * kI / 4.0) < 1e-13);

  CHECK_THROWS_AS(from_betti(s, b, Chart::X, Complex(0, 0)), ZeroLambda);
  BettiPoint bad{cvec2(Complex(0, 0), Complex(1, 0))};
  CHECK_THROWS_AS(from_betti(s, bad, Chart::X, Complex(1, 0)), InvalidBettiPoint);
}

TEST_CASE("from_betti round trip on both charts") {
  const Surface s = surface_diag({Complex(0.5, 2.0), Complex(0.1, 0.6)});
  Sampler rng(23);
  for (int t = 0; t < 200; ++t) {
    const Point p = random_point(rng, 2, true);
    const Point q = from_betti(s, monodromy(s, p), p.chart, p.lambda);
    CHECK(gauge_equal(s, q, p, 1e-9));
  }
}

TEST_CASE("monodromy is invariant under fiber rescaling") {
  const Surface s = surface_g1(Complex(0.3, 1.4));
  Sampler rng(29);
  for (int t = 0; t < 200; ++t) {
    const Point p = random_point(rng, 1, true);
    const Complex c = rng.annulus();
    Point q = p;
    q.lambda = c * p.lambda;
    q.v = c * p.v;
    const BettiPoint a = monodromy(s, p);
    const BettiPoint b = monodromy(s, q);
    for (int k = 0; k < 2; ++k)
      CHECK(std::abs(a.rho[k] - b.rho[k]) / std::abs(a.rho[k]) < 1e-12);
  }
}
