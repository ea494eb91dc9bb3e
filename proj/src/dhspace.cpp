#include "dh/dhspace.hpp"

#include <cmath>

namespace dh {

Point glue(const Point& p) {
  if (p.lambda == Complex(0.0, 0.0))
    throw OnZeroFiber("gluing is only defined over C^*");
  Point q;
  q.chart = other_chart(p.chart);
  q.lambda = 1.0 / p.lambda;
  q.u = p.v / p.lambda;
  q.v = p.u / p.lambda;
  return q;
}

Point eval_section(const Section& s, const CP1& z) {
  Point p;
  if (!z.is_infinity() && std::abs(z.value()) <= 1.0) {
    const Complex lam = z.value();
    p.chart = Chart::X;
    p.lambda = lam;
    p.u = s.omega + lam * s.eta;
    p.v = lam * s.alpha + s.beta;
  } else {
    const Complex mu = z.is_infinity() ? Complex(0.0, 0.0) : 1.0 / z.value();
    p.chart = Chart::Xbar;
    p.lambda = mu;
    p.u = s.alpha + mu * s.beta;
    p.v = s.eta + mu * s.omega;
  }
  return p;
}

Section fit_section(const Surface& s, const Point& p1, const Point& p2) {
  if (cp1_equal(fiber(p1), fiber(p2), kLatticeTol))
    throw SameFiber("points sit over the same fiber");

  auto to_x_chart = [](const Point& p) {
    if (p.chart == Chart::X) return p;
    if (p.lambda == Complex(0.0, 0.0))
      throw ChartMismatch("a point over z = infinity has no chart-X representative");
    return glue(p);
  };
  const Point a = normal_form(s, to_x_chart(p1));
  const Point b = normal_form(s, to_x_chart(p2));

  // omega + lambda_k * eta = u_k, lambda_k * alpha + beta = v_k.
  const Complex den = b.lambda - a.lambda;
  Section sec;
  sec.eta = (b.u - a.u) / den;
  sec.omega = a.u - a.lambda * sec.eta;
  sec.alpha = (b.v - a.v) / den;
  sec.beta = a.v - a.lambda * sec.alpha;
  return sec;
}

long long normal_bundle_degree(long long deg_i, long long genus_sigma, long long genus_x) {
  return (2 * genus_x + 2) * deg_i + 2 * genus_sigma - 2;
}

bool points_equal(const Surface& s, const Point& a, const Point& b, double tol) {
  if (!cp1_equal(fiber(a), fiber(b), tol)) return false;
  Point x = a;
  Point y = b;
  if (x.chart != y.chart) {
    // Equal fibers with different charts force both lambdas nonzero.
    if (y.lambda == Complex(0.0, 0.0) || x.lambda == Complex(0.0, 0.0)) return false;
    y = glue(y);
  }
  const Point nx = normal_form(s, x);
  const Point ny = normal_form(s, y);
  return (nx.u - ny.u).cwiseAbs().maxCoeff() <= tol &&
         (nx.v - ny.v).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace dh
