#ifndef ACGC_AXIAL_HPP
#define ACGC_AXIAL_HPP

// The scalar profile f(x) = (1/3) x R_D(1, 1, x^2) in closed form, its
// series and asymptotic inverses, and the large-x asymptote of arccos^2.
//
// f decreases strictly from 1 at x -> 0+ through f(1) = 1/3 to 0 at
// x -> infinity; it is the distinct-axis second moment of an axially
// symmetric angular central Gaussian state with concentration b = x^(4/3).

namespace acgc::axial {

// f via the closed forms
//   x < 1:  1/(1 - x^2) - x arccos(x) / (1 - x^2)^(3/2)
//   x > 1:  x arctanh(sqrt(1 - 1/x^2)) / (x^2 - 1)^(3/2) - 1/(x^2 - 1)
// (arctanh term evaluated as acosh(x), the same function in stable form).
// |x - 1| < 1e-4 switches to the Taylor series
//   1/3 - (4/15) h + (6/35) h^2 - (32/315) h^3 + (40/693) h^4,  h = x - 1.
// Relative accuracy ~1e-12 or better on [1e-3, 1e3].  Requires x > 0.
double f_axial(double x);

// Degree-4 Taylor polynomial of f at x = 0:
//   1 - (pi/2) x + 2 x^2 - (3 pi/4) x^3 + (8/3) x^4.  Domain [0, 0.1].
double f_axial_series0(double x);

// Asymptotic inverse of f near a -> 0:
//   x = (e/2) exp(-W_-1(-e^2 a / 2) / 2),  0 < a <= 2 e^-3.
// Equivalently sqrt(-W_-1(-e^2 a / 2) / (2a)).
double inv_asym_zero(double a);

// First-order inverse of f near a -> 1: x = (2/pi)(1 - a), a in (0, 1].
double inv_first_order_one(double a);

// Second-order inverse near a -> 1:
//   x = (pi - sqrt(32 a + pi^2 - 32)) / 8,  requires 32 a + pi^2 - 32 >= 0.
double inv_second_order_one(double a);

// -(ln 2x)^2, the x -> infinity asymptote of Re[(arccos x)^2].  x > 1.
double arccos_sq_asymptote(double x);

}  // namespace acgc::axial

#endif  // ACGC_AXIAL_HPP
