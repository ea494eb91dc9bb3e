#include "dh/hodge.hpp"

#include <cmath>

namespace dh {

namespace {

void check_point(const Surface& s, const Point& p) {
  if (p.u.size() != s.genus() || p.v.size() != s.genus())
    throw DimensionMismatch("point coefficient vectors must have length g");
}

}  // namespace

CP1 fiber(const Point& p) {
  if (p.chart == Chart::X) return CP1::finite(p.lambda);
  if (p.lambda == Complex(0.0, 0.0)) return CP1::infinity();
  return CP1::finite(1.0 / p.lambda);
}

Point normal_form(const Surface& s, const Point& p) {
  check_point(s, p);
  Point q = p;
  if (p.chart == Chart::X) {
    // u is a (0,1)-vector; reduce it directly.
    auto [d_red, n] = s.reduce_mod_lattice(p.u);
    q.u = d_red;
    q.v = p.v - p.lambda * s.lattice_10_part(n);
  } else {
    // On Xbar, u lives in the (1,0)-lattice; c_n = -conj(d_n) turns its
    // coordinates into (0,1)-coordinates of -conj(u).
    auto [r, n] = s.reduce_mod_lattice(-p.u.conjugate());
    q.u = -r.conjugate();
    q.v = p.v - p.lambda * s.lattice_01_part(n);
  }
  return q;
}

Point gauge_shift(const Surface& s, const Point& p, const IVec& n) {
  check_point(s, p);
  Point q = p;
  if (p.chart == Chart::X) {
    q.u = p.u + s.lattice_01_part(n);
    q.v = p.v + p.lambda * s.lattice_10_part(n);
  } else {
    q.u = p.u + s.lattice_10_part(n);
    q.v = p.v + p.lambda * s.lattice_01_part(n);
  }
  return q;
}

bool gauge_equal(const Surface& s, const Point& a, const Point& b, double tol) {
  if (a.chart != b.chart) return false;
  if (std::abs(a.lambda - b.lambda) > tol) return false;
  const Point na = normal_form(s, a);
  const Point nb = normal_form(s, b);
  return (na.u - nb.u).cwiseAbs().maxCoeff() <= tol &&
         (na.v - nb.v).cwiseAbs().maxCoeff() <= tol;
}

Vec flat_connection_periods(const Surface& s, const Point& p) {
  check_point(s, p);
  if (p.lambda == Complex(0.0, 0.0))
    throw ZeroLambda("flat connection form needs lambda != 0");
  const Mat& P = s.period_basis();
  if (p.chart == Chart::X) return P.conjugate() * p.u + P * (p.v / p.lambda);
  return P * p.u + P.conjugate() * (p.v / p.lambda);
}

BettiPoint monodromy(const Surface& s, const Point& p) {
  const Vec xi = flat_connection_periods(s, p);
  Vec rho(xi.size());
  for (Eigen::Index k = 0; k < xi.size(); ++k) rho[k] = std::exp(-xi[k]);
  return BettiPoint{std::move(rho)};
}

Point from_betti(const Surface& s, const BettiPoint& b, Chart chart, Complex lambda) {
  if (b.rho.size() != 2 * s.genus())
    throw InvalidBettiPoint("character must have length 2g");
  for (Eigen::Index k = 0; k < b.rho.size(); ++k)
    if (b.rho[k] == Complex(0.0, 0.0))
      throw InvalidBettiPoint("character values must be nonzero");
  if (lambda == Complex(0.0, 0.0)) throw ZeroLambda("no monodromy on the lambda = 0 fiber");

  Vec xi(b.rho.size());
  for (Eigen::Index k = 0; k < b.rho.size(); ++k) xi[k] = -std::log(b.rho[k]);
  auto [holo, anti] = s.hodge_decompose(xi, /*conjugated=*/chart == Chart::Xbar);
  Point p;
  p.chart = chart;
  p.lambda = lambda;
  p.u = anti;
  p.v = lambda * holo;
  return normal_form(s, p);
}

}  // namespace dh
