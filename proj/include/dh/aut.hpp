#pragma once

#include <vector>

#include "dh/hodge.hpp"
#include "dh/surface.hpp"
#include "dh/types.hpp"

namespace dh {

// Polynomial lambda -> sum_k coeffs[k] * lambda^k with values in H^0(K_X)
// coefficient vectors. Trailing zero coefficients are trimmed; the zero
// polynomial has empty coeffs and degree -1.
struct VPoly {
  int g = 0;
  std::vector<Vec> coeffs;

  int degree() const { return int(coeffs.size()) - 1; }
  Vec eval(Complex lambda) const;
  void trim(double tol = 0.0);
};

// A de Rham point (flat connection), stored as the normal form of the fiber
// coordinates over lambda = 1 on chart X.
struct DeRhamPoint {
  Vec u;
  Vec v;
};

DeRhamPoint make_de_rham(const Surface& s, Vec u, Vec v);

// Vertical shear by a polynomial: (lambda, u, v) -> (lambda, u, v + w(lambda)).
// Fixes every fiber setwise; over lambda = 0 the Higgs field shifts by the
// constant coefficient w(0).
Point iota_apply(const VPoly& w, const Point& p);

// Tensoring with the flat line bundle of t: u and v shift by the constant
// section of t scaled to the fiber, (lambda, u, v) -> (lambda, u + u_t,
// v + lambda * v_t), returned in normal form.
Point tensor_apply(const Surface& s, const DeRhamPoint& t, const Point& p);

// C^*-action covering lambda -> c*lambda: (lambda, u, v) -> (c*lambda, u, c*v).
Point scale_apply(const Surface& s, Complex c, const Point& p);

// Element of the identity component of the automorphism group of the Hodge
// moduli space of X, in the fixed factorization iota_w after tensor after
// scale: p -> iota_w(tensor_t(scale_c(p))).
struct HodgeAut {
  VPoly w;
  DeRhamPoint tensor;
  Complex scale{1.0, 0.0};
};

HodgeAut make_hodge_aut(const Surface& s, VPoly w, DeRhamPoint tensor, Complex scale);
Point hodge_aut_apply(const Surface& s, const HodgeAut& t, const Point& p);

// Composition a after b in the fixed factorization; exact on the scale and
// tensor parts, with the polynomial recombined as w_a(mu) + c_a * w_b(mu / c_a).
HodgeAut hodge_aut_compose(const Surface& s, const HodgeAut& a, const HodgeAut& b);

// The quotient homomorphism onto Pic^0(X) x C^*: the Pic^0 class is the
// reduced (0,1)-part of the tensor factor, the C^* part is the scale. Its
// kernel is exactly the group of vertical shears iota_w.
struct HMapValue {
  Vec pic_class;  // reduced (0,1)-vector in the fundamental domain
  Complex scale;
};

HMapValue h_map(const Surface& s, const HodgeAut& t);

// Element of the identity component of the automorphism group of the twistor
// space: a de Rham point of X (acting by tensoring), alpha in H^0(K_X),
// eta_bar in conj(H^0(K_X)) and tau in C^*. Composition follows
//   (A1 * A2) = (nabla1 + nabla2, alpha1 + tau1 * alpha2,
//                eta_bar1 + eta_bar2 / tau1, tau1 * tau2).
struct Aut0 {
  DeRhamPoint nabla;
  Vec alpha;
  Vec eta_bar;
  Complex tau{1.0, 0.0};
};

Aut0 make_aut0(const Surface& s, DeRhamPoint nabla, Vec alpha, Vec eta_bar, Complex tau);
Aut0 aut0_identity(const Surface& s);
Aut0 aut0_compose(const Surface& s, const Aut0& a, const Aut0& b);
Aut0 aut0_inverse(const Surface& s, const Aut0& a);

// Action on chart X:
//   (lambda, u, v) -> (tau*lambda, u + u_nabla + tau*lambda*eta_bar,
//                      tau*v + alpha + tau*lambda*v_nabla)
// and on chart Xbar by the glued formula, holomorphic across lambda_bar = 0.
Point aut0_apply(const Surface& s, const Aut0& a, const Point& p);

// Discrete symmetries: the duality involution L -> L^*, pullback by lattice
// automorphisms of the Jacobian compatible with the complex structure, and
// chart-swapping lattice maps intertwining X and Xbar over lambda -> 1/lambda.
enum class GammaKind { Duality, Lattice, LatticeSwap };

struct Gamma {
  GammaKind kind = GammaKind::Duality;
  IMat m;      // 2g x 2g integer matrix; empty for duality
  Mat action;  // g x g complex matrix A with M^T P = P A (lattice) or
               // M^T P = conj(P) A (swap); empty for duality
};

Gamma make_duality();
// Validates det M = +-1 (exact) and compatibility with the complex structure
// within tol; throws IncompatibleMatrix otherwise.
Gamma make_lattice_map(const Surface& s, IMat m, bool swap, double tol = kLatticeTol);

Point gamma_apply(const Surface& s, const Gamma& t, const Point& p);

// Scaling factor of the polarization class under pullback: M^T J M = s*J with
// s in {+1, -1}, decided in exact integer arithmetic (duality gives +1).
// Throws NotThetaScaling when M^T J M is not proportional to J.
int pullback_theta(const Gamma& t);

bool fixes_theta(const Gamma& t);
inline bool fixes_theta(const Aut0&) { return true; }

// Recovers a vertical shear from samples: the unique polynomial of degree
// < lambdas.size() through (lambda_j, values_j), coefficients below tol (in
// sup norm) trimmed from the top.
VPoly interpolate_vpoly(int g, const std::vector<Complex>& lambdas,
                        const std::vector<Vec>& values, double tol = 1e-12);

}  // namespace dh
