#pragma once

#include "dh/hodge.hpp"
#include "dh/surface.hpp"
#include "dh/types.hpp"

namespace dh {

// Chart transition of the twistor space over C^*: the lambda-connection D is
// rescaled to the flat connection D/lambda and read in the opposite chart,
//   (lambda, u, v) -> (1/lambda, v/lambda, u/lambda)
// with the chart toggled. An involution; preserves monodromy exactly. Throws
// OnZeroFiber over lambda = 0 (the fibers f^0 and f^inf live in one chart only).
Point glue(const Point& p);

// A holomorphic section of the twistor fibration determined by alpha, beta in
// H^0(K_X) and omega, eta in conj(H^0(K_X)) (all stored as coefficient
// vectors): over chart X it is lambda -> (lambda, omega + lambda*eta,
// lambda*alpha + beta), and across infinity it extends with
// mu -> (mu, alpha + mu*beta, eta + mu*omega) on chart Xbar.
struct Section {
  Vec alpha;
  Vec beta;
  Vec omega;
  Vec eta;
};

// Value of the section over a base point; |z| <= 1 is reported on chart X,
// |z| > 1 and infinity on chart Xbar.
Point eval_section(const Section& s, const CP1& z);

// The unique section through two points over distinct fibers, solved on the
// normal-form representatives in chart X (points on Xbar with lambda != 0 are
// glued over first). Throws SameFiber for equal fibers, ChartMismatch when a
// point over z = infinity (or z = 0 on chart Xbar) makes a common chart
// impossible.
Section fit_section(const Surface& s, const Point& p1, const Point& p2);

// Degree of the normal bundle of a section that factors as the twistor line of
// a degree deg_i map from a genus genus_sigma curve into a genus genus_x
// surface's twistor space: (2*genus_x + 2)*deg_i + 2*genus_sigma - 2.
long long normal_bundle_degree(long long deg_i, long long genus_sigma, long long genus_x);

// Equality of twistor-space points: fibers must match, then the points are
// moved to a common chart (gluing where needed) and their normal forms are
// compared within tol.
bool points_equal(const Surface& s, const Point& a, const Point& b, double tol = kLatticeTol);

}  // namespace dh
