#pragma once

#include <utility>

#include "dh/types.hpp"

namespace dh {

// Genus and period matrix tau of a compact Riemann surface, with respect to a
// symplectic homology basis a_1..a_g, b_1..b_g and the normalized basis
// omega_1..omega_g of holomorphic one-forms (a-periods delta_ij, b-periods
// tau_ij). tau must be symmetric with positive definite imaginary part.
struct PeriodMatrix {
  int g = 0;
  Mat tau;
};

// Throws InvalidPeriodMatrix / SymmetryViolation / NotPositiveDefinite.
void validate(const PeriodMatrix& pm);

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPosDefTol = 1e-10;
inline constexpr double kLatticeTol = 1e-9;
inline constexpr double kGramCondLimit = 1e12;

// Exact integer intersection pairing m^T J n of lattice coordinate vectors,
// J = [[0, I], [-I, 0]] (a_i dual to b_i). On the conjugate surface the
// orientation flips and the pairing negates; callers account for that.
long long symplectic_pairing(const IVec& m, const IVec& n);

// A compact genus-g surface in harmonic-form coordinates. H^1(X, C) is
// identified with C^{2g} through the period map against the symplectic basis;
// the columns of P = [I; tau] are the periods of omega_i and the columns of
// conj(P) the periods of conj(omega_i). Precomputes the solvers for the Hodge
// decomposition and for the integral lattice
//   Lambda = { harmonic eta : all periods of eta lie in 2*pi*i*Z },
// whose (0,1)-parts form a rank-2g real lattice in C^g.
class Surface {
public:
  explicit Surface(PeriodMatrix pm);

  int genus() const { return g_; }
  const Mat& tau() const { return tau_; }
  const Mat& period_basis() const { return P_; }  // 2g x g, [I; tau]

  // Splits a period vector p in C^{2g} as p = P c + conj(P) d. Returns (c, d):
  // the (1,0)- and (0,1)-coefficients on chart X. With conjugated set the pair
  // is reported swapped, so the first entry is always the chart-holomorphic
  // part (on Xbar the roles of omega_i and conj(omega_i) interchange).
  std::pair<Vec, Vec> hodge_decompose(const Vec& periods, bool conjugated = false) const;

  // P c + conj(P) d.
  Vec reconstruct(const Vec& c, const Vec& d) const;

  // (0,1)- resp. (1,0)-part of the lattice point with periods 2*pi*i*n.
  // For lattice points the parts are conjugate-opposite: c_n = -conj(d_n).
  Vec lattice_01_part(const IVec& n) const;
  Vec lattice_10_part(const IVec& n) const;

  // Reduces a (0,1)-coefficient vector modulo the lattice of (0,1)-parts of
  // Lambda. Returns (d_reduced, n) with d = d_reduced + lattice_01_part(n) and
  // the real coordinates of d_reduced in [-1/2, 1/2)^{2g} (ties resolved by
  // n_k = floor(t_k + 1/2)). Throws IllConditionedLattice if the real Gram
  // solve behind the coordinates is too ill-conditioned to trust.
  std::pair<Vec, IVec> reduce_mod_lattice(const Vec& d) const;

  // Real coordinates of d with respect to the (0,1)-parts of the lattice basis.
  RVec lattice_coordinates(const Vec& d) const;

  // Whether a period vector lies in Lambda; optionally reports the integer
  // coordinates. Absolute tolerance on the period residual.
  bool in_lattice(const Vec& periods, IVec* n_out = nullptr, double tol = kLatticeTol) const;

private:
  int g_;
  Mat tau_;
  Mat P_;               // 2g x g
  Mat A_;               // [P, conj(P)], 2g x 2g
  Eigen::PartialPivLU<Mat> period_lu_;
  Mat c01_;             // g x 2g, column k = (1,0)-part of 2*pi*i*e_k
  Mat d01_;             // g x 2g, column k = (0,1)-part of 2*pi*i*e_k
  RMat lattice_real_;   // 2g x 2g, stacked Re/Im of d01_
  Eigen::PartialPivLU<RMat> lattice_lu_;
  double gram_cond_;
};

}  // namespace dh
