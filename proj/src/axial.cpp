#include "acgc/axial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "acgc/lambert.hpp"

namespace acgc::axial {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

[[noreturn]] void fail(const char* fn, const char* msg) {
  throw std::domain_error(std::string("axial::") + fn + ": " + msg);
}

}  // namespace

double f_axial(double x) {
  if (!(x > 0.0)) fail("f_axial", "argument must be positive");
  const double h = x - 1.0;
  if (std::abs(h) < 1e-3) {
    // Taylor at x = 1; truncation at the window edge is the h^5 term, ~5e-17.
    return 1.0 / 3.0 +
           h * (-4.0 / 15.0 +
                h * (6.0 / 35.0 + h * (-32.0 / 315.0 + h * (40.0 / 693.0))));
  }
  // 1 - x^2 as a product: x - 1 is exact near 1, so s carries ~1 ulp where
  // the naive difference would inherit 1e-13 from squaring and the 1/s
  // cancellation would blow that up past 1e-11.
  if (x < 1.0) {
    const double s = (1.0 - x) * (1.0 + x);
    return (1.0 - x * std::acos(x) / std::sqrt(s)) / s;
  }
  const double s = (x - 1.0) * (x + 1.0);
  // arctanh(sqrt(1 - 1/x^2)) == acosh(x); the latter loses no digits as
  // x grows, the former sheds ~5 near x = 1e3.
  return x * std::acosh(x) / (s * std::sqrt(s)) - 1.0 / s;
}

double f_axial_series0(double x) {
  if (x < 0.0 || x > 0.1) fail("f_axial_series0", "domain is [0, 0.1]");
  return 1.0 +
         x * (-kPi / 2.0 +
              x * (2.0 + x * (-3.0 * kPi / 4.0 + x * (8.0 / 3.0))));
}

double inv_asym_zero(double a) {
  if (!(a > 0.0) || a > 2.0 * std::exp(-3.0)) {
    fail("inv_asym_zero", "domain is (0, 2 e^-3]");
  }
  // -e^2 a / 2 phrased as -e^-1 * (a / (2 e^-3)): at the domain boundary
  // the ratio is exactly 1, the W argument lands exactly on the branch
  // point, and the algebraic value e^{3/2}/2 comes out to rounding.
  const double w = lambert::w_m1(-std::exp(-1.0) * (a / (2.0 * std::exp(-3.0))));
  return (kE / 2.0) * std::exp(-w / 2.0);
}

double inv_first_order_one(double a) {
  if (!(a > 0.0) || a > 1.0) fail("inv_first_order_one", "domain is (0, 1]");
  return (2.0 / kPi) * (1.0 - a);
}

double inv_second_order_one(double a) {
  const double radicand = 32.0 * a + kPi * kPi - 32.0;
  if (radicand < 0.0 || a > 1.0) {
    fail("inv_second_order_one", "requires 32a + pi^2 - 32 >= 0 and a <= 1");
  }
  return (kPi - std::sqrt(radicand)) / 8.0;
}

double arccos_sq_asymptote(double x) {
  if (!(x > 1.0)) fail("arccos_sq_asymptote", "requires x > 1");
  const double l = std::log(2.0 * x);
  return -l * l;
}

}  // namespace acgc::axial
