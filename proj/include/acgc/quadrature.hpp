#ifndef ACGC_QUADRATURE_HPP
#define ACGC_QUADRATURE_HPP

#include <functional>
#include <vector>

// Gauss-Legendre rules and a plain adaptive integrator.  Everything here
// serves the cross-check oracles; none of it sits on the fast paths.

namespace acgc::quadrature {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// computed by Newton iteration on P_n from the Chebyshev-like initial
// guesses.  Nodes ascend.  Cached per n after first use.
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<double> nodes;
  std::vector<double> weights;

  // Applies the rule mapped onto [a, b].
  double apply(const std::function<double(double)>& f, double a,
               double b) const;
};

// Adaptive bisection driven by the GL7 / GL15 discrepancy: a panel is
// accepted when |GL15 - GL7| <= tol * (panel length / span), otherwise
// split.  Throws convergence_error past max_depth levels.  tol is
// absolute; callers scale it by a magnitude estimate of the result.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_depth = 48);

}  // namespace acgc::quadrature

#endif  // ACGC_QUADRATURE_HPP
