#include "dh/surface.hpp"

#include <cmath>
#include <numbers>

namespace dh {

namespace {

constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

Vec to_complex(const IVec& n) {
  Vec out(n.size());
  for (Eigen::Index k = 0; k < n.size(); ++k) out[k] = Complex(double(n[k]), 0.0);
  return out;
}

}  // namespace

void validate(const PeriodMatrix& pm) {
  if (pm.g < 1) throw InvalidPeriodMatrix("genus must be >= 1");
  if (pm.tau.rows() != pm.g || pm.tau.cols() != pm.g)
    throw InvalidPeriodMatrix("tau must be g x g");
  if (!pm.tau.allFinite()) throw InvalidPeriodMatrix("tau has non-finite entries");
  const double asym = (pm.tau - pm.tau.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) throw SymmetryViolation("tau is not symmetric");
  Eigen::SelfAdjointEigenSolver<RMat> es(pm.tau.imag());
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= kPosDefTol)
    throw NotPositiveDefinite("Im(tau) is not positive definite");
}

long long symplectic_pairing(const IVec& m, const IVec& n) {
  if (m.size() != n.size() || m.size() % 2 != 0)
    throw DimensionMismatch("pairing needs two 2g-vectors");
  const Eigen::Index g = m.size() / 2;
  long long acc = 0;
  for (Eigen::Index i = 0; i < g; ++i) acc += m[i] * n[g + i] - m[g + i] * n[i];
  return acc;
}

Surface::Surface(PeriodMatrix pm) : g_(pm.g), tau_(std::move(pm.tau)) {
  validate(PeriodMatrix{g_, tau_});

  P_.resize(2 * g_, g_);
  P_.topRows(g_) = Mat::Identity(g_, g_);
  P_.bottomRows(g_) = tau_;

  A_.resize(2 * g_, 2 * g_);
  A_.leftCols(g_) = P_;
  A_.rightCols(g_) = P_.conjugate();
  period_lu_.compute(A_);

  // Hodge parts of the lattice basis: solve A [c; d] = 2*pi*i*I columnwise.
  Mat cd = period_lu_.solve(kTwoPiI * Mat::Identity(2 * g_, 2 * g_));
  c01_ = cd.topRows(g_);
  d01_ = cd.bottomRows(g_);

  lattice_real_.resize(2 * g_, 2 * g_);
  lattice_real_.topRows(g_) = d01_.real();
  lattice_real_.bottomRows(g_) = d01_.imag();
  lattice_lu_.compute(lattice_real_);

  const RMat gram = lattice_real_.transpose() * lattice_real_;
  Eigen::SelfAdjointEigenSolver<RMat> es(gram);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  gram_cond_ = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();
}

std::pair<Vec, Vec> Surface::hodge_decompose(const Vec& periods, bool conjugated) const {
  if (periods.size() != 2 * g_) throw DimensionMismatch("period vector must have length 2g");
  Vec x = period_lu_.solve(periods);
  Vec c = x.head(g_);
  Vec d = x.tail(g_);
  if (conjugated) return {std::move(d), std::move(c)};
  return {std::move(c), std::move(d)};
}

Vec Surface::reconstruct(const Vec& c, const Vec& d) const {
  if (c.size() != g_ || d.size() != g_) throw DimensionMismatch("coefficient vectors must have length g");
  return P_ * c + P_.conjugate() * d;
}

Vec Surface::lattice_01_part(const IVec& n) const {
  if (n.size() != 2 * g_) throw DimensionMismatch("lattice vector must have length 2g");
  return d01_ * to_complex(n);
}

Vec Surface::lattice_10_part(const IVec& n) const {
  if (n.size() != 2 * g_) throw DimensionMismatch("lattice vector must have length 2g");
  return c01_ * to_complex(n);
}

RVec Surface::lattice_coordinates(const Vec& d) const {
  if (d.size() != g_) throw DimensionMismatch("(0,1)-vector must have length g");
  if (gram_cond_ > kGramCondLimit) throw IllConditionedLattice("lattice Gram condition number too large");
  RVec y(2 * g_);
  y.head(g_) = d.real();
  y.tail(g_) = d.imag();
  return lattice_lu_.solve(y);
}

std::pair<Vec, IVec> Surface::reduce_mod_lattice(const Vec& d) const {
  const RVec t = lattice_coordinates(d);
  IVec n(2 * g_);
  for (int k = 0; k < 2 * g_; ++k) n[k] = (long long)std::floor(t[k] + 0.5);
  Vec d_red = d - lattice_01_part(n);
  return {std::move(d_red), std::move(n)};
}

bool Surface::in_lattice(const Vec& periods, IVec* n_out, double tol) const {
  if (periods.size() != 2 * g_) throw DimensionMismatch("period vector must have length 2g");
  IVec n(2 * g_);
  for (int k = 0; k < 2 * g_; ++k) {
    const Complex w = periods[k] / kTwoPiI;
    n[k] = (long long)std::llround(w.real());
  }
  double resid = 0.0;
  for (int k = 0; k < 2 * g_; ++k)
    resid = std::max(resid, std::abs(periods[k] - kTwoPiI * double(n[k])));
  if (resid > tol) return false;
  if (n_out) *n_out = n;
  return true;
}

}  // namespace dh
