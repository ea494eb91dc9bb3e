#include "dh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dh/aut.hpp"
#include "dh/dhspace.hpp"
#include "dh/hodge.hpp"
#include "dh/json_io.hpp"
#include "dh/rng.hpp"

namespace dh {

namespace {

constexpr double kBig = 1e30;  // sentinel error for structural mismatches

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

double sup(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

double point_diff(const Surface& s, const Point& a, const Point& b) {
  if (a.chart != b.chart) return kBig;
  const Point na = normal_form(s, a);
  const Point nb = normal_form(s, b);
  return std::max({sup(na.u - nb.u), sup(na.v - nb.v), std::abs(na.lambda - nb.lambda)});
}

double fiber_diff(const CP1& a, const CP1& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity() ? 0.0 : kBig;
  return std::abs(a.value() - b.value()) / std::max({1.0, std::abs(a.value()), std::abs(b.value())});
}

Point random_point(const Surface& s, Sampler& rng, bool nonzero_lambda) {
  Point p;
  p.chart = rng.unit() < 0.5 ? Chart::X : Chart::Xbar;
  if (nonzero_lambda)
    p.lambda = rng.annulus();
  else
    p.lambda = rng.unit() < 0.15 ? Complex(0.0, 0.0) : rng.annulus();
  p.u = rng.cvec(s.genus());
  p.v = rng.cvec(s.genus());
  return p;
}

Section random_section(const Surface& s, Sampler& rng) {
  return Section{rng.cvec(s.genus()), rng.cvec(s.genus()), rng.cvec(s.genus()),
                 rng.cvec(s.genus())};
}

Aut0 random_aut0(const Surface& s, Sampler& rng) {
  DeRhamPoint nabla{rng.cvec(s.genus()), rng.cvec(s.genus())};
  return make_aut0(s, std::move(nabla), rng.cvec(s.genus()), rng.cvec(s.genus()), rng.annulus());
}

HodgeAut random_hodge_aut(const Surface& s, Sampler& rng, int maxdeg = 3) {
  VPoly w;
  w.g = s.genus();
  const int deg = int(rng.integer(0, maxdeg));
  for (int k = 0; k <= deg; ++k) w.coeffs.push_back(rng.cvec(s.genus()));
  DeRhamPoint tensor{rng.cvec(s.genus()), rng.cvec(s.genus())};
  return make_hodge_aut(s, std::move(w), std::move(tensor), rng.annulus());
}

bool purely_imaginary_tau(const Surface& s) {
  return s.tau().real().cwiseAbs().maxCoeff() < 1e-12;
}

IMat identity_m(int g, long long sign) {
  IMat m = IMat::Zero(2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i) m(i, i) = sign;
  return m;
}

// a -> a, b -> -b; intertwines the conjugate complex structures exactly when
// tau is purely imaginary.
IMat conjugation_m(int g) {
  IMat m = IMat::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) m(i, i) = 1;
  for (int i = g; i < 2 * g; ++i) m(i, i) = -1;
  return m;
}

using PropertyFn = std::function<double(const Surface&, Sampler&)>;

struct PropertySpec {
  const char* name;
  double tolerance;
  PropertyFn fn;
};

// ---- surface ----------------------------------------------------------

double prop_hodge_roundtrip(const Surface& s, Sampler& rng) {
  const Vec c = rng.cvec(s.genus());
  const Vec d = rng.cvec(s.genus());
  auto [c2, d2] = s.hodge_decompose(s.reconstruct(c, d));
  return std::max(sup(c2 - c), sup(d2 - d));
}

double prop_hodge_conjugated_flag(const Surface& s, Sampler& rng) {
  Vec p(2 * s.genus());
  for (int k = 0; k < 2 * s.genus(); ++k) p[k] = rng.box();
  auto [c, d] = s.hodge_decompose(p);
  auto [h, a] = s.hodge_decompose(p, /*conjugated=*/true);
  return std::max(sup(h - d), sup(a - c));
}

double prop_lattice_conj_identity(const Surface& s, Sampler& rng) {
  const IVec n = rng.ivec(2 * s.genus(), -3, 3);
  return sup(s.lattice_10_part(n) + s.lattice_01_part(n).conjugate());
}

double prop_lattice_membership(const Surface& s, Sampler& rng) {
  const IVec n = rng.ivec(2 * s.genus(), -3, 3);
  const Vec periods = s.reconstruct(s.lattice_10_part(n), s.lattice_01_part(n));
  IVec rec;
  if (!s.in_lattice(periods, &rec)) return kBig;
  for (int k = 0; k < 2 * s.genus(); ++k)
    if (rec[k] != n[k]) return kBig;
  return 0.0;
}

double prop_reduce_idempotent(const Surface& s, Sampler& rng) {
  const Vec d = rng.cvec(s.genus(), 6.0);
  auto [r, n] = s.reduce_mod_lattice(d);
  auto [r2, n2] = s.reduce_mod_lattice(r);
  double err = sup(r2 - r);
  for (int k = 0; k < 2 * s.genus(); ++k)
    if (n2[k] != 0) err = kBig;
  (void)n;
  return err;
}

double prop_reduce_equivariant(const Surface& s, Sampler& rng) {
  const Vec d = rng.cvec(s.genus(), 6.0);
  const IVec m = rng.ivec(2 * s.genus(), -3, 3);
  auto [r1, n1] = s.reduce_mod_lattice(d);
  auto [r2, n2] = s.reduce_mod_lattice(d + s.lattice_01_part(m));
  double err = sup(r2 - r1);
  for (int k = 0; k < 2 * s.genus(); ++k)
    if (n2[k] != n1[k] + m[k]) err = kBig;
  return err;
}

double prop_reduce_in_domain(const Surface& s, Sampler& rng) {
  const Vec d = rng.cvec(s.genus(), 6.0);
  auto [r, n] = s.reduce_mod_lattice(d);
  (void)n;
  const RVec t = s.lattice_coordinates(r);
  double err = 0.0;
  for (int k = 0; k < 2 * s.genus(); ++k)
    err = std::max({err, -0.5 - t[k], t[k] - 0.5});
  return err;
}

double prop_symplectic_bilinear(const Surface& s, Sampler& rng) {
  const IVec m = rng.ivec(2 * s.genus(), -5, 5);
  const IVec n = rng.ivec(2 * s.genus(), -5, 5);
  const IVec k = rng.ivec(2 * s.genus(), -5, 5);
  const long long add = symplectic_pairing(IVec(m + k), n) - symplectic_pairing(m, n) -
                        symplectic_pairing(k, n);
  const long long skew = symplectic_pairing(m, n) + symplectic_pairing(n, m);
  return double(std::abs(add) + std::abs(skew));
}

// ---- hodge -------------------------------------------------------------

double prop_normal_form_gauge(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, false);
  const IVec n = rng.ivec(2 * s.genus(), -3, 3);
  return point_diff(s, gauge_shift(s, p, n), p);
}

double prop_normal_form_idempotent(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, false);
  const Point q = normal_form(s, p);
  const Point q2 = normal_form(s, q);
  return std::max(sup(q2.u - q.u), sup(q2.v - q.v));
}

double rho_reldiff(const BettiPoint& a, const BettiPoint& b) {
  double err = 0.0;
  for (Eigen::Index k = 0; k < a.rho.size(); ++k)
    err = std::max(err, std::abs(a.rho[k] - b.rho[k]) / std::abs(b.rho[k]));
  return err;
}

double prop_monodromy_gauge_invariance(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, true);
  const IVec n = rng.ivec(2 * s.genus(), -2, 2);
  return rho_reldiff(monodromy(s, gauge_shift(s, p, n)), monodromy(s, p));
}

double prop_from_betti_roundtrip(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, true);
  const Point q = from_betti(s, monodromy(s, p), p.chart, p.lambda);
  return point_diff(s, q, p);
}

double prop_monodromy_homomorphism(const Surface& s, Sampler& rng) {
  Point p = random_point(s, rng, true);
  Point q = p;
  q.u = rng.cvec(s.genus());
  q.v = rng.cvec(s.genus());
  Point pq = p;
  pq.u = p.u + q.u;
  pq.v = p.v + q.v;
  const BettiPoint a = monodromy(s, p);
  const BettiPoint b = monodromy(s, q);
  BettiPoint ab{Vec(a.rho.cwiseProduct(b.rho))};
  return rho_reldiff(monodromy(s, pq), ab);
}

double prop_rescaling_invariance(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, true);
  const Complex c = rng.annulus();
  Point q = p;
  q.lambda = c * p.lambda;
  q.v = c * p.v;
  return rho_reldiff(monodromy(s, q), monodromy(s, p));
}

// ---- dh ----------------------------------------------------------------

double prop_glue_involution(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, true);
  const Point q = glue(glue(p));
  if (q.chart != p.chart) return kBig;
  return std::max({sup(q.u - p.u), sup(q.v - p.v), std::abs(q.lambda - p.lambda)});
}

double prop_glue_preserves_monodromy(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, true);
  return rho_reldiff(monodromy(s, glue(p)), monodromy(s, p));
}

double prop_glue_fiber(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, true);
  return fiber_diff(fiber(glue(p)), fiber(p));
}

double prop_section_eval_glue_compat(const Surface& s, Sampler& rng) {
  const Section sec = random_section(s, rng);
  const Complex z = rng.annulus(0.5, 2.0);
  Point px;
  px.chart = Chart::X;
  px.lambda = z;
  px.u = sec.omega + z * sec.eta;
  px.v = z * sec.alpha + sec.beta;
  const Complex mu = 1.0 / z;
  Point pb;
  pb.chart = Chart::Xbar;
  pb.lambda = mu;
  pb.u = sec.alpha + mu * sec.beta;
  pb.v = sec.eta + mu * sec.omega;
  const double direct = point_diff(s, glue(px), pb);
  const double through_eval = points_equal(s, eval_section(sec, CP1::finite(z)), pb) ? 0.0 : kBig;
  return std::max(direct, through_eval);
}

double prop_section_infinity(const Surface& s, Sampler& rng) {
  const Section sec = random_section(s, rng);
  const Point p = eval_section(sec, CP1::infinity());
  if (p.chart != Chart::Xbar || p.lambda != Complex(0.0, 0.0)) return kBig;
  return std::max(sup(p.u - sec.alpha), sup(p.v - sec.eta));
}

double prop_fit_section_roundtrip(const Surface& s, Sampler& rng) {
  const Section sec = random_section(s, rng);
  const Complex z1 = rng.annulus(0.25, 4.0);
  Complex z2 = rng.annulus(0.25, 4.0);
  while (std::abs(z1 - z2) < 1e-3) z2 = rng.annulus(0.25, 4.0);
  const Point p1 = eval_section(sec, CP1::finite(z1));
  const Point p2 = eval_section(sec, CP1::finite(z2));
  const Section fitted = fit_section(s, p1, p2);
  const double e1 = points_equal(s, eval_section(fitted, CP1::finite(z1)), p1) ? 0.0 : kBig;
  const double e2 = points_equal(s, eval_section(fitted, CP1::finite(z2)), p2) ? 0.0 : kBig;
  return std::max(e1, e2);
}

double prop_section_through_points(const Surface& s, Sampler& rng) {
  Point p1 = random_point(s, rng, true);
  Point p2 = random_point(s, rng, true);
  if (fiber_diff(fiber(p1), fiber(p2)) < 1e-3) return 0.0;  // resampled next trial
  const Section fitted = fit_section(s, p1, p2);
  const double e1 = points_equal(s, eval_section(fitted, fiber(p1)), p1) ? 0.0 : kBig;
  const double e2 = points_equal(s, eval_section(fitted, fiber(p2)), p2) ? 0.0 : kBig;
  return std::max(e1, e2);
}

double prop_normal_bundle_degree(const Surface& s, Sampler& rng) {
  const long long deg = rng.integer(1, 5);
  const long long gs = rng.integer(0, 4);
  const long long gx = s.genus();
  long long err = std::abs(normal_bundle_degree(1, 0, gx) - 2 * gx);
  err += std::abs(normal_bundle_degree(deg, gs, gx) -
                  ((2 * gx + 2) * deg + 2 * gs - 2));
  return double(err);
}

// ---- aut ---------------------------------------------------------------

double prop_iota_kernel(const Surface& s, Sampler& rng) {
  VPoly w;
  w.g = s.genus();
  const int deg = int(rng.integer(0, 3));
  for (int k = 0; k <= deg; ++k) w.coeffs.push_back(rng.cvec(s.genus()));
  const Vec zero = Vec::Zero(s.genus());
  const HodgeAut t = make_hodge_aut(s, w, DeRhamPoint{zero, zero}, Complex(1.0, 0.0));
  const HMapValue h = h_map(s, t);
  Point p = random_point(s, rng, false);
  p.chart = Chart::X;
  const double fib = fiber_diff(fiber(hodge_aut_apply(s, t, p)), fiber(p));
  return std::max({sup(h.pic_class), std::abs(h.scale - Complex(1.0, 0.0)), fib});
}

double prop_h_multiplicative(const Surface& s, Sampler& rng) {
  const HodgeAut a = random_hodge_aut(s, rng);
  const HodgeAut b = random_hodge_aut(s, rng);
  const HMapValue hab = h_map(s, hodge_aut_compose(s, a, b));
  auto [pic, n] = s.reduce_mod_lattice(a.tensor.u + b.tensor.u);
  (void)n;
  return std::max(sup(hab.pic_class - pic), std::abs(hab.scale - a.scale * b.scale));
}

double prop_h_exactness_kernel(const Surface& s, Sampler& rng) {
  // A kernel element: lattice-trivial tensor class, unit scale and a shear.
  const IVec n = rng.ivec(2 * s.genus(), -2, 2);
  VPoly w;
  w.g = s.genus();
  const int deg = int(rng.integer(0, 2));
  for (int k = 0; k <= deg; ++k) w.coeffs.push_back(rng.cvec(s.genus()));
  const HodgeAut t = make_hodge_aut(
      s, w, DeRhamPoint{s.lattice_01_part(n), rng.cvec(s.genus())}, Complex(1.0, 0.0));
  const HMapValue h = h_map(s, t);
  double err = std::max(sup(h.pic_class), std::abs(h.scale - Complex(1.0, 0.0)));

  // Recover the shear by interpolation and compare actions.
  const int samples = 2 * (std::max(t.w.degree(), 1)) + 1;
  std::vector<Complex> lambdas;
  std::vector<Vec> deltas;
  Point base;
  base.chart = Chart::X;
  base.u = 0.05 * rng.cvec(s.genus());
  base.v = rng.cvec(s.genus());
  for (int k = 0; k < samples; ++k) {
    const Complex lam = std::polar(1.0, 2.0 * std::numbers::pi * k / samples);
    base.lambda = lam;
    const Point out = hodge_aut_apply(s, t, base);
    lambdas.push_back(lam);
    deltas.push_back(Vec(out.v - base.v));
  }
  const VPoly fitted = interpolate_vpoly(s.genus(), lambdas, deltas, 1e-10);
  for (int k = 0; k < 5; ++k) {
    Point p = random_point(s, rng, false);
    p.chart = Chart::X;
    err = std::max(err, point_diff(s, iota_apply(fitted, p), hodge_aut_apply(s, t, p)));
  }
  return err;
}

double prop_aut0_compose_law(const Surface& s, Sampler& rng) {
  const Aut0 a = random_aut0(s, rng);
  const Aut0 b = random_aut0(s, rng);
  const Aut0 ab = aut0_compose(s, a, b);
  const DeRhamPoint nab = make_de_rham(s, a.nabla.u + b.nabla.u, a.nabla.v + b.nabla.v);
  double err = std::max({sup(ab.alpha - (a.alpha + a.tau * b.alpha)),
                         sup(ab.eta_bar - (a.eta_bar + b.eta_bar / a.tau)),
                         std::abs(ab.tau - a.tau * b.tau)});
  err = std::max({err, sup(ab.nabla.u - nab.u), sup(ab.nabla.v - nab.v)});
  return err;
}

double prop_aut0_associativity(const Surface& s, Sampler& rng) {
  const Aut0 a = random_aut0(s, rng);
  const Aut0 b = random_aut0(s, rng);
  const Aut0 c = random_aut0(s, rng);
  const Aut0 l = aut0_compose(s, aut0_compose(s, a, b), c);
  const Aut0 r = aut0_compose(s, a, aut0_compose(s, b, c));
  return std::max({sup(l.alpha - r.alpha), sup(l.eta_bar - r.eta_bar),
                   std::abs(l.tau - r.tau), sup(l.nabla.u - r.nabla.u),
                   sup(l.nabla.v - r.nabla.v)});
}

double aut0_dist(const Aut0& a, const Aut0& b) {
  return std::max({sup(a.alpha - b.alpha), sup(a.eta_bar - b.eta_bar),
                   std::abs(a.tau - b.tau), sup(a.nabla.u - b.nabla.u),
                   sup(a.nabla.v - b.nabla.v)});
}

double prop_aut0_identity_inverse(const Surface& s, Sampler& rng) {
  const Aut0 a = random_aut0(s, rng);
  const Aut0 inv = aut0_inverse(s, a);
  const Aut0 id = aut0_identity(s);
  return std::max(aut0_dist(aut0_compose(s, a, inv), id),
                  aut0_dist(aut0_compose(s, inv, a), id));
}

double prop_aut0_apply_compose_compat(const Surface& s, Sampler& rng) {
  const Aut0 a = random_aut0(s, rng);
  const Aut0 b = random_aut0(s, rng);
  const Point p = random_point(s, rng, false);
  const Point lhs = aut0_apply(s, aut0_compose(s, a, b), p);
  const Point rhs = aut0_apply(s, a, aut0_apply(s, b, p));
  return point_diff(s, lhs, rhs);
}

double prop_aut0_fiber_action(const Surface& s, Sampler& rng) {
  const Aut0 a = random_aut0(s, rng);
  const Point p = random_point(s, rng, false);
  const CP1 z = fiber(p);
  const CP1 w = fiber(aut0_apply(s, a, p));
  if (z.is_infinity() || w.is_infinity())
    return (z.is_infinity() && w.is_infinity()) ? 0.0 : kBig;
  return std::abs(w.value() - a.tau * z.value()) /
         std::max({1.0, std::abs(w.value()), std::abs(a.tau * z.value())});
}

double prop_gauge_shear_fixes_f0_finf(const Surface& s, Sampler& rng) {
  const IVec n = rng.ivec(2 * s.genus(), -2, 2);
  const Vec zero = Vec::Zero(s.genus());
  const Aut0 a = make_aut0(s, DeRhamPoint{zero, s.lattice_10_part(n)}, zero, zero,
                           Complex(1.0, 0.0));
  Point p0 = random_point(s, rng, false);
  p0.chart = Chart::X;
  p0.lambda = Complex(0.0, 0.0);
  Point pinf = random_point(s, rng, false);
  pinf.chart = Chart::Xbar;
  pinf.lambda = Complex(0.0, 0.0);
  return std::max(point_diff(s, aut0_apply(s, a, p0), p0),
                  point_diff(s, aut0_apply(s, a, pinf), pinf));
}

double prop_duality_conjugation(const Surface& s, Sampler& rng) {
  const Aut0 a = random_aut0(s, rng);
  const Gamma dual = make_duality();
  const Aut0 conj = make_aut0(s, DeRhamPoint{Vec(-a.nabla.u), Vec(-a.nabla.v)}, Vec(-a.alpha),
                              Vec(-a.eta_bar), a.tau);
  const Point p = random_point(s, rng, false);
  const Point lhs = gamma_apply(s, dual, aut0_apply(s, a, gamma_apply(s, dual, p)));
  const Point rhs = aut0_apply(s, conj, p);
  return point_diff(s, lhs, rhs);
}

double prop_duality_involution(const Surface& s, Sampler& rng) {
  const Gamma dual = make_duality();
  const Point p = random_point(s, rng, false);
  const double twice = point_diff(s, gamma_apply(s, dual, gamma_apply(s, dual, p)), p);
  if (p.lambda == Complex(0.0, 0.0)) return twice;
  const double commutes = point_diff(s, glue(gamma_apply(s, dual, p)),
                                     gamma_apply(s, dual, glue(p)));
  return std::max(twice, commutes);
}

double prop_fiber_scaling(const Surface& s, Sampler& rng) {
  const HodgeAut t = random_hodge_aut(s, rng);
  Point p = random_point(s, rng, false);
  p.chart = Chart::X;
  const CP1 w = fiber(hodge_aut_apply(s, t, p));
  const Complex expect = t.scale * p.lambda;
  if (w.is_infinity()) return kBig;
  return std::abs(w.value() - expect) / std::max({1.0, std::abs(w.value()), std::abs(expect)});
}

double prop_gamma_fiber_action(const Surface& s, Sampler& rng) {
  const Point p = random_point(s, rng, true);
  const Gamma neg = make_lattice_map(s, identity_m(s.genus(), -1), false);
  double err = fiber_diff(fiber(gamma_apply(s, neg, p)), fiber(p));
  if (purely_imaginary_tau(s)) {
    const Gamma swap = make_lattice_map(s, conjugation_m(s.genus()), true);
    const CP1 z = fiber(p);
    const CP1 w = fiber(gamma_apply(s, swap, p));
    if (w.is_infinity() || z.is_infinity()) return kBig;
    err = std::max(err, std::abs(w.value() - 1.0 / z.value()) /
                            std::max({1.0, std::abs(w.value()), 1.0 / std::abs(z.value())}));
  }
  return err;
}

double prop_theta_classification(const Surface& s, Sampler& rng) {
  (void)rng;
  double err = 0.0;
  if (pullback_theta(make_duality()) != 1) err = kBig;
  if (!fixes_theta(make_duality())) err = kBig;
  for (long long sign : {1ll, -1ll}) {
    const Gamma t = make_lattice_map(s, identity_m(s.genus(), sign), false);
    if (pullback_theta(t) != 1 || !fixes_theta(t)) err = kBig;
  }
  if (purely_imaginary_tau(s)) {
    const Gamma swap = make_lattice_map(s, conjugation_m(s.genus()), true);
    if (pullback_theta(swap) != -1 || fixes_theta(swap)) err = kBig;
  }
  return err;
}

const std::vector<PropertySpec>& property_table() {
  static const std::vector<PropertySpec> table = {
      {"aut.aut0_apply_compose_compat", 1e-9, prop_aut0_apply_compose_compat},
      {"aut.aut0_associativity", 1e-12, prop_aut0_associativity},
      {"aut.aut0_compose_law", 1e-12, prop_aut0_compose_law},
      {"aut.aut0_fiber_action", 1e-9, prop_aut0_fiber_action},
      {"aut.aut0_identity_inverse", 1e-12, prop_aut0_identity_inverse},
      {"aut.duality_conjugation", 1e-9, prop_duality_conjugation},
      {"aut.duality_involution", 1e-9, prop_duality_involution},
      {"aut.fiber_scaling", 1e-9, prop_fiber_scaling},
      {"aut.gamma_fiber_action", 1e-9, prop_gamma_fiber_action},
      {"aut.gauge_shear_fixes_f0_finf", 1e-9, prop_gauge_shear_fixes_f0_finf},
      {"aut.h_exactness_kernel", 1e-9, prop_h_exactness_kernel},
      {"aut.h_multiplicative", 1e-9, prop_h_multiplicative},
      {"aut.iota_kernel", 1e-9, prop_iota_kernel},
      {"aut.theta_classification", 1e-12, prop_theta_classification},
      {"dh.fit_section_roundtrip", 1e-9, prop_fit_section_roundtrip},
      {"dh.glue_fiber", 1e-12, prop_glue_fiber},
      {"dh.glue_involution", 1e-12, prop_glue_involution},
      {"dh.glue_preserves_monodromy", 1e-9, prop_glue_preserves_monodromy},
      {"dh.normal_bundle_degree", 1e-12, prop_normal_bundle_degree},
      {"dh.section_eval_glue_compat", 1e-9, prop_section_eval_glue_compat},
      {"dh.section_infinity", 1e-12, prop_section_infinity},
      {"dh.section_through_points", 1e-9, prop_section_through_points},
      {"hodge.from_betti_roundtrip", 1e-9, prop_from_betti_roundtrip},
      {"hodge.monodromy_gauge_invariance", 1e-9, prop_monodromy_gauge_invariance},
      {"hodge.monodromy_homomorphism", 1e-9, prop_monodromy_homomorphism},
      {"hodge.normal_form_gauge", 1e-9, prop_normal_form_gauge},
      {"hodge.normal_form_idempotent", 1e-12, prop_normal_form_idempotent},
      {"hodge.rescaling_invariance", 1e-12, prop_rescaling_invariance},
      {"surface.hodge_conjugated_flag", 1e-12, prop_hodge_conjugated_flag},
      {"surface.hodge_roundtrip", 1e-10, prop_hodge_roundtrip},
      {"surface.lattice_conj_identity", 1e-12, prop_lattice_conj_identity},
      {"surface.lattice_membership", 1e-9, prop_lattice_membership},
      {"surface.reduce_equivariant", 1e-9, prop_reduce_equivariant},
      {"surface.reduce_idempotent", 1e-9, prop_reduce_idempotent},
      {"surface.reduce_in_domain", 1e-9, prop_reduce_in_domain},
      {"surface.symplectic_bilinear", 1e-12, prop_symplectic_bilinear},
  };
  return table;
}

}  // namespace

std::vector<PropertyResult> run_properties(const Surface& s, const VerifyOptions& opt) {
  if (opt.trials < 1 || opt.trials > 1000000)
    throw ConfigError("trials must be in [1, 1e6]");
  std::vector<PropertyResult> out;
  for (const PropertySpec& spec : property_table()) {
    PropertyResult r;
    r.property = spec.name;
    r.tolerance = opt.tolerance_override >= 0.0 ? opt.tolerance_override : spec.tolerance;
    r.trials = opt.trials;
    Sampler rng(opt.seed ^ fnv1a(spec.name));
    for (long long k = 0; k < opt.trials; ++k) {
      const double err = spec.fn(s, rng);
      r.worst_error = std::max(r.worst_error, err);
      if (err > r.tolerance) ++r.failures;
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.property < b.property; });
  return out;
}

long long total_failures(const std::vector<PropertyResult>& results) {
  long long total = 0;
  for (const PropertyResult& r : results) total += r.failures;
  return total;
}

std::string report_json(const PeriodMatrix& pm, const VerifyOptions& opt,
                        const std::vector<PropertyResult>& results) {
  std::string out = "{\"seed\":" + std::to_string(opt.seed);
  out += ",\"surface\":" + to_json(pm);
  out += ",\"trials\":" + std::to_string(opt.trials);
  out += ",\"properties\":[";
  for (size_t i = 0; i < results.size(); ++i) {
    const PropertyResult& r = results[i];
    if (i) out += ",";
    out += "{\"property\":\"" + r.property + "\"";
    out += ",\"trials\":" + std::to_string(r.trials);
    out += ",\"failures\":" + std::to_string(r.failures);
    out += ",\"worst_error\":" + format_double(r.worst_error);
    out += ",\"tolerance\":" + format_double(r.tolerance) + "}";
  }
  out += "],\"total_failures\":" + std::to_string(total_failures(results)) + "}";
  return out;
}

}  // namespace dh
