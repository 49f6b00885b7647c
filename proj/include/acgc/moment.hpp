#ifndef ACGC_MOMENT_HPP
#define ACGC_MOMENT_HPP

#include "acgc/tensor.hpp"

// Second/fourth moment machinery of the angular central Gaussian on S^2
// in its eigenbasis: the forward map b -> a, Newton inversion a -> b on
// the det(b) = 1 manifold, the exact fourth-moment closure, the planar
// and unidirectional special states, and four asymptotic closure
// formulas for the axially symmetric lines of the simplex.
//
// Conventions: a lives on the unit simplex (a_i >= 0, sum 1), b on the
// det-1 manifold (b_i > 0, b1 b2 b3 = 1).  Everything is pure.

namespace acgc::moment {

// a_i = (1/3) R_D(b_j, b_k, b_i).  Requires every b_i > 0 and
// |b1 b2 b3 - 1| <= 1e-8; b is renormalized to det 1 geometrically
// before evaluation.  Output sums to 1 within 1e-12.
EigenTriple a_from_b(const EigenTriple& b);

struct NewtonReport {
  int iterations = 0;
  double residual = 0.0;  // max |a_from_b(b)_i - a_i| at exit
};

// Inverts a_from_b by Newton iteration in (ln b1, ln b2) with
// b3 = 1/(b1 b2), analytic Jacobian from rd_partials, damped steps.
// Requires every a_i >= 1e-10 and |sum a - 1| <= 1e-8 (renormalized).
// Stops when the residual drops below 1e-13; throws convergence_error
// after 50 iterations.
EigenTriple b_from_a(const EigenTriple& a, NewtonReport* report = nullptr);

// Axially symmetric forward map: the second moment along the distinct
// axis of b = (beta^{-1/2}, beta^{-1/2}, beta), i.e. f_axial(beta^{3/4}).
double axial_forward(double beta);

// Inverse of axial_forward by bisection; a in (1e-12, 1 - 1e-12).
// Forward residual relative 1e-12 or better.
double axial_invert(double a);

// Exact closure: A_iijj = (1/2)(a_i b_i - a_j b_j)/(b_i - b_j) for
// i != j, diagonal by the contraction A_iiii = a_i - sum_{j != i} A_iijj.
// Near-coincident b pairs (|b_i - b_j| < 1e-7 max b) switch to the
// analytic limit of the divided difference built from rd_partials.
// Requires (a, b) consistent: max |a_from_b(b)_i - a_i| <= 1e-8.
SymTensor4 exact_closure(const EigenTriple& a, const EigenTriple& b);

// Planar parameterization b_i = 1/a_i - 1 on the in-plane axes; the
// slot of the vanishing a_i carries +infinity.  Requires exactly one
// a_i = 0 (within 1e-14) and the other two positive summing to 1.
EigenTriple planar_b_from_a(const EigenTriple& a);

// Planar closure A_iijj = (1/2) a_i (a_j + delta_ij); valid for planar
// a (one zero entry) and the unidirectional corners (two zero entries).
SymTensor4 planar_closure(const EigenTriple& a);

// Axially symmetric asymptotes for A_iiii with a the distinct
// eigenvalue.  asym1/asym2 serve a -> 0+, asym4/asym5 serve a -> 1-.
double aiiii_asym1(double a);  // (3a-1)/(2 + W_-1(-e^2 a/2)/a), 0 < a <= 2e^-3
double aiiii_asym2(double a);  // W replaced by ln; wrong limit, kept for comparison
double aiiii_asym4(double a);  // (3a-1)/(2 - (8/pi^2)(a-1)^2), 0 < a <= 1
double aiiii_asym5(double a);  // second-order variant, a >= 1 - pi^2/32

struct ClosureResult {
  SymTensor4 A;
  EigenTriple b;        // +inf / 0 entries on degenerate routes
  ClosureMethod route;  // path actually taken (Exact dispatches by pattern)
};

// Dispatcher.  Exact routes by the pattern of a: entries below 1e-10
// are boundary (two -> unidirectional, one -> planar), two equal
// entries (within 1e-10) take the scalar axial path, the rest run
// Newton.  Asym* require an axial pattern and build the full tensor
// from the given a and the asymptote's b.  The input sum must be 1
// within 1e-8 (renormalized exactly before use).
ClosureResult closure_full(const EigenTriple& a, ClosureMethod method);
SymTensor4 closure(const EigenTriple& a, ClosureMethod method);

namespace detail {
// The closure formula applied to an (a, b) pair without the
// consistency check; the asymptotic routes feed deliberately
// inconsistent pairs through it.
SymTensor4 closure_from_pair(const EigenTriple& a, const EigenTriple& b);
}  // namespace detail

}  // namespace acgc::moment

#endif  // ACGC_MOMENT_HPP
