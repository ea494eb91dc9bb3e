#pragma once

#include "dh/surface.hpp"
#include "dh/types.hpp"

namespace dh {

// A point of the Hodge moduli space in one of the two charts.
//
// Chart X:    (lambda, u, v) is the lambda-connection (dbar + sum u_i conj(omega_i),
//             lambda*del + sum v_i omega_i) on the line bundle with Dolbeault
//             operator twisted by the (0,1)-form u.
// Chart Xbar: the conjugate surface; u are omega-coefficients and v are
//             conj(omega)-coefficients, mirror-symmetrically.
//
// The gauge group shifts (u, v) by lattice points: on chart X
//   (u, v) ~ (u + d_n, v + lambda * c_n)
// for (c_n, d_n) the Hodge parts of the lattice point 2*pi*i*n, and with the
// chart-holomorphic / antiholomorphic roles swapped on Xbar.
struct Point {
  Chart chart = Chart::X;
  Complex lambda{0.0, 0.0};
  Vec u;
  Vec v;
};

// Twistor fibration to CP^1: chart X sits over lambda, chart Xbar over
// 1/lambda_bar with the fiber over infinity at lambda_bar = 0.
CP1 fiber(const Point& p);

// Canonical gauge representative: u is translated into the fundamental domain
// [-1/2, 1/2)^{2g} of the chart-antiholomorphic lattice and v picks up the
// matching -lambda * (chart-holomorphic part) shift.
Point normal_form(const Surface& s, const Point& p);

// True if a and b are the same chart, the same lambda (absolute tolerance) and
// gauge-equivalent, i.e. their normal forms agree within tol.
bool gauge_equal(const Surface& s, const Point& a, const Point& b, double tol = kLatticeTol);

// The lattice gauge transformation labelled by n, chart-adapted.
Point gauge_shift(const Surface& s, const Point& p, const IVec& n);

// Monodromy character of pi_1 evaluated on the symplectic basis.
struct BettiPoint {
  Vec rho;  // length 2g, entries in C^*
};

// Periods of the flat connection form of D/lambda over the symplectic basis.
// Throws ZeroLambda on the fibers where D/lambda does not exist.
Vec flat_connection_periods(const Surface& s, const Point& p);

// Riemann-Hilbert in rank one: rho_k = exp(-xi_k) for xi the flat connection
// form periods. Gauge invariant; multiplicative under tensor product.
BettiPoint monodromy(const Surface& s, const Point& p);

// Inverse of monodromy on the chosen chart and fiber, using the principal
// branch of log on every coordinate; the branch ambiguity is exactly a lattice
// gauge shift, and the result is returned in normal form.
Point from_betti(const Surface& s, const BettiPoint& b, Chart chart, Complex lambda);

}  // namespace dh
