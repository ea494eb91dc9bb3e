#include "dh/aut.hpp"

#include <cmath>

namespace dh {

namespace {

void check_chart_x(const Point& p, const char* what) {
  if (p.chart != Chart::X)
    throw ChartMismatch(std::string(what) + " acts on chart X");
}

void check_coeff(int g, const Vec& x, const char* what) {
  if (x.size() != g) throw DimensionMismatch(std::string(what) + " must have length g");
}

// Fraction-free Gaussian elimination; exact for integer matrices.
long long det_bareiss(IMat m) {
  const Eigen::Index n = m.rows();
  if (n == 0 || m.cols() != n) throw DimensionMismatch("determinant of a non-square matrix");
  long long sign = 1;
  __int128 prev = 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * (long long)a[n - 1][n - 1];
}

IMat standard_j(Eigen::Index g) {
  IMat j = IMat::Zero(2 * g, 2 * g);
  for (Eigen::Index i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

bool imat_equal(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

Vec VPoly::eval(Complex lambda) const {
  Vec acc = Vec::Zero(g);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = lambda * acc + *it;
  return acc;
}

void VPoly::trim(double tol) {
  while (!coeffs.empty() && coeffs.back().cwiseAbs().maxCoeff() <= tol) coeffs.pop_back();
}

DeRhamPoint make_de_rham(const Surface& s, Vec u, Vec v) {
  Point p;
  p.chart = Chart::X;
  p.lambda = Complex(1.0, 0.0);
  p.u = std::move(u);
  p.v = std::move(v);
  const Point q = normal_form(s, p);
  return DeRhamPoint{q.u, q.v};
}

Point iota_apply(const VPoly& w, const Point& p) {
  check_chart_x(p, "a vertical shear");
  if (w.g != p.v.size()) throw DimensionMismatch("shear polynomial has the wrong genus");
  Point q = p;
  q.v = p.v + w.eval(p.lambda);
  return q;
}

Point tensor_apply(const Surface& s, const DeRhamPoint& t, const Point& p) {
  check_chart_x(p, "tensoring");
  check_coeff(s.genus(), t.u, "tensor factor u");
  check_coeff(s.genus(), t.v, "tensor factor v");
  Point q = p;
  q.u = p.u + t.u;
  q.v = p.v + p.lambda * t.v;
  return normal_form(s, q);
}

Point scale_apply(const Surface& s, Complex c, const Point& p) {
  check_chart_x(p, "the C^* action");
  if (c == Complex(0.0, 0.0)) throw ZeroScale("scale factor must be nonzero");
  Point q = p;
  q.lambda = c * p.lambda;
  q.v = c * p.v;
  return normal_form(s, q);
}

HodgeAut make_hodge_aut(const Surface& s, VPoly w, DeRhamPoint tensor, Complex scale) {
  if (scale == Complex(0.0, 0.0)) throw ZeroScale("scale factor must be nonzero");
  if (w.g != s.genus()) throw DimensionMismatch("shear polynomial has the wrong genus");
  for (const Vec& c : w.coeffs) check_coeff(s.genus(), c, "shear coefficient");
  w.trim();
  return HodgeAut{std::move(w), make_de_rham(s, tensor.u, tensor.v), scale};
}

Point hodge_aut_apply(const Surface& s, const HodgeAut& t, const Point& p) {
  return iota_apply(t.w, tensor_apply(s, t.tensor, scale_apply(s, t.scale, p)));
}

HodgeAut hodge_aut_compose(const Surface& s, const HodgeAut& a, const HodgeAut& b) {
  VPoly w;
  w.g = s.genus();
  w.coeffs.resize(std::max(a.w.coeffs.size(), b.w.coeffs.size()), Vec::Zero(s.genus()));
  // a(b(p)): the inner shear passes through the outer scale,
  // w(mu) = a.w(mu) + c_a * b.w(mu / c_a).
  Complex pw{1.0, 0.0};  // c_a^{1-k}
  for (size_t k = 0; k < w.coeffs.size(); ++k) {
    if (k < b.w.coeffs.size()) w.coeffs[k] += (a.scale * pw) * b.w.coeffs[k];
    if (k < a.w.coeffs.size()) w.coeffs[k] += a.w.coeffs[k];
    pw /= a.scale;
  }
  w.trim();
  DeRhamPoint tensor = make_de_rham(s, a.tensor.u + b.tensor.u, a.tensor.v + b.tensor.v);
  return HodgeAut{std::move(w), std::move(tensor), a.scale * b.scale};
}

HMapValue h_map(const Surface& s, const HodgeAut& t) {
  auto [pic, n] = s.reduce_mod_lattice(t.tensor.u);
  (void)n;
  return HMapValue{std::move(pic), t.scale};
}

Aut0 make_aut0(const Surface& s, DeRhamPoint nabla, Vec alpha, Vec eta_bar, Complex tau) {
  if (tau == Complex(0.0, 0.0)) throw ZeroScale("tau must be nonzero");
  check_coeff(s.genus(), alpha, "alpha");
  check_coeff(s.genus(), eta_bar, "eta_bar");
  return Aut0{make_de_rham(s, nabla.u, nabla.v), std::move(alpha), std::move(eta_bar), tau};
}

Aut0 aut0_identity(const Surface& s) {
  const Vec z = Vec::Zero(s.genus());
  return Aut0{DeRhamPoint{z, z}, z, z, Complex(1.0, 0.0)};
}

Aut0 aut0_compose(const Surface& s, const Aut0& a, const Aut0& b) {
  DeRhamPoint nabla = make_de_rham(s, a.nabla.u + b.nabla.u, a.nabla.v + b.nabla.v);
  Vec alpha = a.alpha + a.tau * b.alpha;
  Vec eta_bar = a.eta_bar + b.eta_bar / a.tau;
  return Aut0{std::move(nabla), std::move(alpha), std::move(eta_bar), a.tau * b.tau};
}

Aut0 aut0_inverse(const Surface& s, const Aut0& a) {
  DeRhamPoint nabla = make_de_rham(s, -a.nabla.u, -a.nabla.v);
  return Aut0{std::move(nabla), -a.alpha / a.tau, -a.tau * a.eta_bar, 1.0 / a.tau};
}

Point aut0_apply(const Surface& s, const Aut0& a, const Point& p) {
  check_coeff(s.genus(), p.u, "point u");
  check_coeff(s.genus(), p.v, "point v");
  Point q;
  q.chart = p.chart;
  if (p.chart == Chart::X) {
    q.lambda = a.tau * p.lambda;
    q.u = p.u + a.nabla.u + q.lambda * a.eta_bar;
    q.v = a.tau * p.v + a.alpha + q.lambda * a.nabla.v;
  } else {
    // Glued action, holomorphic across lambda_bar = 0.
    q.lambda = p.lambda / a.tau;
    q.u = p.u + a.nabla.v + q.lambda * a.alpha;
    q.v = p.v / a.tau + a.eta_bar + q.lambda * a.nabla.u;
  }
  return normal_form(s, q);
}

Gamma make_duality() { return Gamma{GammaKind::Duality, IMat(), Mat()}; }

Gamma make_lattice_map(const Surface& s, IMat m, bool swap, double tol) {
  const int g = s.genus();
  if (m.rows() != 2 * g || m.cols() != 2 * g)
    throw DimensionMismatch("lattice map must be 2g x 2g");
  const long long det = det_bareiss(m);
  if (det != 1 && det != -1)
    throw IncompatibleMatrix("lattice map must have determinant +-1");

  Mat mt(2 * g, 2 * g);
  for (Eigen::Index i = 0; i < 2 * g; ++i)
    for (Eigen::Index j = 0; j < 2 * g; ++j) mt(i, j) = double(m(j, i));
  const Mat image = mt * s.period_basis();  // 2g x g

  Mat action(g, g);
  double offpart = 0.0;
  for (int j = 0; j < g; ++j) {
    auto [c, d] = s.hodge_decompose(image.col(j));
    if (!swap) {
      offpart = std::max(offpart, d.cwiseAbs().maxCoeff());
      action.col(j) = c;
    } else {
      offpart = std::max(offpart, c.cwiseAbs().maxCoeff());
      action.col(j) = d;
    }
  }
  if (offpart > tol)
    throw IncompatibleMatrix(swap ? "matrix does not intertwine the conjugate complex structures"
                                  : "matrix is not compatible with the complex structure");
  return Gamma{swap ? GammaKind::LatticeSwap : GammaKind::Lattice, std::move(m), std::move(action)};
}

Point gamma_apply(const Surface& s, const Gamma& t, const Point& p) {
  check_coeff(s.genus(), p.u, "point u");
  check_coeff(s.genus(), p.v, "point v");
  Point q = p;
  switch (t.kind) {
    case GammaKind::Duality:
      q.u = -p.u;
      q.v = -p.v;
      break;
    case GammaKind::Lattice:
      if (p.chart == Chart::X) {
        q.u = t.action.conjugate() * p.u;
        q.v = t.action * p.v;
      } else {
        q.u = t.action * p.u;
        q.v = t.action.conjugate() * p.v;
      }
      break;
    case GammaKind::LatticeSwap:
      q.chart = other_chart(p.chart);
      if (p.chart == Chart::X) {
        q.u = t.action.conjugate() * p.u;
        q.v = t.action * p.v;
      } else {
        q.u = t.action * p.u;
        q.v = t.action.conjugate() * p.v;
      }
      break;
  }
  return normal_form(s, q);
}

int pullback_theta(const Gamma& t) {
  if (t.kind == GammaKind::Duality) return 1;
  const Eigen::Index g = t.m.rows() / 2;
  const IMat j = standard_j(g);
  const IMat w = t.m.transpose() * j * t.m;
  if (imat_equal(w, j)) return 1;
  if (imat_equal(w, IMat(-j))) return -1;
  throw NotThetaScaling("pullback of the polarization is not proportional to it");
}

bool fixes_theta(const Gamma& t) {
  if (t.kind == GammaKind::Duality) return true;
  const Eigen::Index g = t.m.rows() / 2;
  return imat_equal(IMat(t.m.transpose() * standard_j(g) * t.m), standard_j(g));
}

VPoly interpolate_vpoly(int g, const std::vector<Complex>& lambdas,
                        const std::vector<Vec>& values, double tol) {
  const size_t n = lambdas.size();
  if (n == 0 || values.size() != n)
    throw DimensionMismatch("interpolation needs matching nonempty samples");
  Mat vand(n, n);
  for (size_t i = 0; i < n; ++i) {
    Complex pw{1.0, 0.0};
    for (size_t k = 0; k < n; ++k) {
      vand(i, k) = pw;
      pw *= lambdas[i];
    }
  }
  Eigen::PartialPivLU<Mat> lu(vand);
  VPoly w;
  w.g = g;
  w.coeffs.assign(n, Vec::Zero(g));
  Vec rhs(n);
  for (int comp = 0; comp < g; ++comp) {
    for (size_t i = 0; i < n; ++i) rhs[i] = values[i][comp];
    const Vec sol = lu.solve(rhs);
    for (size_t k = 0; k < n; ++k) w.coeffs[k][comp] = sol[k];
  }
  w.trim(tol);
  return w;
}

}  // namespace dh
