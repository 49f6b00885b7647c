#ifndef ACGC_ORACLE_HPP
#define ACGC_ORACLE_HPP

#include <vector>

#include "acgc/tensor.hpp"

// Brute-force evaluators kept deliberately independent of the fast
// paths: the defining single integral of the hypergeometric R function,
// product quadrature on the unit sphere, the t-integral form of the
// fourth moment, and the planar circle integral.  Slow by design; used
// by tests and the verification command only.

namespace acgc::oracle {

// Parameters of R_{-a}(b; z) = (1/B(a,a')) int t^(a'-1) prod (t+z_j)^(-b_j) dt
// with a' = sum(b) - a.  Requires a > 0, a' > 0, z_j >= 0 finite,
// len(b) == len(z) >= 1.  Zero z_j are folded into the endpoint
// exponent, which must stay positive.
struct HyperParams {
  double a = 0.0;
  std::vector<double> b;
  std::vector<double> z;
};

// Adaptive quadrature of the defining integral, split at t = 1 with the
// tail mapped by t -> 1/u and endpoints regularized by power
// substitutions.  Relative accuracy ~1e-10 or better for arguments in
// [0.01, 100].  Throws convergence_error if bisection bottoms out.
double r_hyper(const HyperParams& p);

struct QuadInfo {
  int nodes = 0;         // polar node count of the accepted refinement
  bool converged = false;
  bool in_window = true;  // all b inside the documented window [0.02, 50]
};

// ACG moments over S^2: Gauss-Legendre in cos(theta) times uniform
// midpoints in phi, node count doubling from 128 until two refinements
// agree to 1e-9 (cap 1024; see info->converged).  All six / fifteen
// components come from quadrature, so off-diagonal and odd-multiplicity
// entries are genuine near-zero checks, not constants.
SymTensor2 sphere_moment2(const EigenTriple& b, QuadInfo* info = nullptr);
SymTensor4 sphere_moment4(const EigenTriple& b, QuadInfo* info = nullptr);

// Fourth moment as (3/4) det(B)^(1/2) int t S((B+tI)^-1 (x) (B+tI)^-1)
//   / sqrt(det(B+tI)) dt for diagonal B; odd components vanish
// identically here.  Relative accuracy ~1e-8.
SymTensor4 aiv_t_integral(const EigenTriple& b);

// Planar (2D) ACG moments on the circle by periodic trapezoid
// quadrature, node doubling until 1e-10 agreement.  Requires
// b1 b2 = 1 within 1e-10.  Components touching the third axis are zero.
SymTensor2 circle_moment2(double b1, double b2);
SymTensor4 circle_moment4(double b1, double b2);

}  // namespace acgc::oracle

#endif  // ACGC_ORACLE_HPP
