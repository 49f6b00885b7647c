#ifndef ACGC_LAMBERT_HPP
#define ACGC_LAMBERT_HPP

// Negative branch W_-1 of the Lambert W function on [-1/e, 0).

namespace acgc::lambert {

// Continued-fraction initializer ln(x / ln(x / ... ln(-x))): the innermost
// term is ln(-x), followed by `depth` refinements w <- ln(x / w).  Accurate
// to ~1e-2 relative on (-0.3, -1e-6) at the default depth; exposed so the
// initializer can be tested on its own.
double w_m1_continued_fraction(double x, int depth = 8);

// W_-1(x) for x in [-1/e, 0).  Initial guess from the branch-point series
// w = -1 - q - q^2/3 - (11/72) q^3, q = sqrt(2(1 + e x)), for x < -0.27 and
// from the continued fraction otherwise, refined by Halley iteration until
// the step falls below 1e-15 |w| (at most 10 iterations).  Residual
// |w e^w - x| <= 1e-13 |x| across the domain; W_-1(-1/e) = -1 exactly.
double w_m1(double x);

// W_-1(x) / ln(-x), the ratio that tends to 1 as x -> 0^-.  Domain [-1/e, 0).
double w_m1_log_ratio(double x);

}  // namespace acgc::lambert

#endif  // ACGC_LAMBERT_HPP
