#include "acgc/lambert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace acgc::lambert {
namespace {

constexpr double kE = std::numbers::e;

[[noreturn]] void fail(const char* fn, const char* what) {
  throw std::domain_error(std::string("lambert::") + fn + ": " + what);
}

void check_domain(const char* fn, double x) {
  if (std::isnan(x)) fail(fn, "argument is NaN");
  if (x >= 0.0) fail(fn, "requires x < 0");
  // 1 + e x < 0 beyond rounding noise means x < -1/e
  if (1.0 + kE * x < -1e-12) fail(fn, "requires x >= -1/e");
}

}  // namespace

double w_m1_continued_fraction(double x, int depth) {
  check_domain("w_m1_continued_fraction", x);
  double w = std::log(-x);
  for (int k = 0; k < depth; ++k) w = std::log(x / w);
  return w;
}

double w_m1(double x) {
  check_domain("w_m1", x);

  const double r = 2.0 * (1.0 + kE * x);
  if (r <= 0.0) return -1.0;  // branch point within rounding

  double w;
  if (x < -0.27) {
    const double q = std::sqrt(r);
    w = -1.0 - q - q * q / 3.0 - 11.0 / 72.0 * q * q * q;
    // Halley degenerates at the branch point (f' -> 0); the series alone is
    // already ~q^4 accurate where q is this small.
    if (q < 1e-5) return w;
  } else {
    w = w_m1_continued_fraction(x);
  }

  for (int it = 0; it < 10; ++it) {
    const double ew = std::exp(w);
    if (ew == 0.0) break;  // subnormal x; the initializer is all we can do
    const double f = w * ew - x;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0));
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-15 * std::abs(w)) break;
  }
  return w;
}

double w_m1_log_ratio(double x) {
  check_domain("w_m1_log_ratio", x);
  if (2.0 * (1.0 + kE * x) <= 0.0) return 1.0;
  return w_m1(x) / std::log(-x);
}

}  // namespace acgc::lambert
