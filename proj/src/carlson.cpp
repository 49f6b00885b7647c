#include "acgc/carlson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "acgc/tensor.hpp"

namespace acgc::carlson {
namespace {

// Relative argument spread at which the duplication loop hands over to the
// Taylor tail.  The tail error is O(spread^6), so 1e-6 leaves pure rounding.
constexpr double kSpreadTol = 1e-6;
constexpr int kMaxIter = 1000;

[[noreturn]] void fail(const char* fn, const char* what) {
  throw std::domain_error(std::string("carlson::") + fn + ": " + what);
}

bool finite3(double x, double y, double z) {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

}  // namespace

double rc(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) fail("rc", "arguments must be finite");
  if (x < 0.0 || y <= 0.0) fail("rc", "requires x >= 0 and y > 0");

  const double s = x / y - 1.0;
  if (std::abs(s) <= 0.03) {
    // Taylor expansion about x == y; c_k = (-1)^k (2k-1)!! / ((2k)!! (2k+1)).
    // Truncation below 2e-19 for |s| <= 0.03.
    static constexpr double c[11] = {
        1.0,
        -1.0 / 6.0,
        3.0 / 40.0,
        -5.0 / 112.0,
        35.0 / 1152.0,
        -63.0 / 2816.0,
        231.0 / 13312.0,
        -143.0 / 10240.0,
        2027025.0 / 175472640.0,
        -34459425.0 / 3530096640.0,
        654729075.0 / 78033715200.0,
    };
    double acc = c[10];
    for (int k = 9; k >= 0; --k) acc = acc * s + c[k];
    return acc / std::sqrt(y);
  }
  if (x < y) return std::acos(std::sqrt(x / y)) / std::sqrt(y - x);
  // log form of arctanh(sqrt((x-y)/x)); additions only, no cancellation
  const double d = x - y;
  return std::log((std::sqrt(x) + std::sqrt(d)) / std::sqrt(y)) / std::sqrt(d);
}

double rf(double x, double y, double z) {
  if (!finite3(x, y, z)) fail("rf", "arguments must be finite");
  if (x < 0.0 || y < 0.0 || z < 0.0) fail("rf", "arguments must be nonnegative");
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  if (y <= 0.0) fail("rf", "at most one argument may be zero");

  const double x0 = x, y0 = y;  // Z tail term comes from -X - Y
  double A = (x + y + z) / 3.0;
  const double A0 = A;
  double fn = 1.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const double spread = std::max({std::abs(A - x), std::abs(A - y), std::abs(A - z)});
    if (spread < kSpreadTol * A) break;
    const double rx = std::sqrt(x), ry = std::sqrt(y), rz = std::sqrt(z);
    const double lam = rx * ry + ry * rz + rz * rx;
    A = (A + lam) * 0.25;
    x = (x + lam) * 0.25;
    y = (y + lam) * 0.25;
    z = (z + lam) * 0.25;
    fn *= 0.25;
  }
  const double X = (A0 - x0) * fn / A;
  const double Y = (A0 - y0) * fn / A;
  const double Z = -X - Y;
  const double E2 = X * Y - Z * Z;
  const double E3 = X * Y * Z;
  return (1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0) /
         std::sqrt(A);
}

double rd(double x, double y, double z) {
  if (!finite3(x, y, z)) fail("rd", "arguments must be finite");
  if (x < 0.0 || y < 0.0) fail("rd", "requires x, y >= 0");
  if (z <= 0.0) fail("rd", "requires z > 0");
  if (x > y) std::swap(x, y);
  if (y <= 0.0) fail("rd", "at most one of x, y may be zero");

  const double x0 = x, y0 = y;
  double A = (x + y + 3.0 * z) / 5.0;
  const double A0 = A;
  double fn = 1.0;
  double sum = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const double spread = std::max({std::abs(A - x), std::abs(A - y), std::abs(A - z)});
    if (spread < kSpreadTol * A) break;
    const double rx = std::sqrt(x), ry = std::sqrt(y), rz = std::sqrt(z);
    const double lam = rx * ry + ry * rz + rz * rx;
    sum += fn / (rz * (z + lam));
    A = (A + lam) * 0.25;
    x = (x + lam) * 0.25;
    y = (y + lam) * 0.25;
    z = (z + lam) * 0.25;
    fn *= 0.25;
  }
  const double X = (A0 - x0) * fn / A;
  const double Y = (A0 - y0) * fn / A;
  const double Z = -(X + Y) / 3.0;
  const double E2 = X * Y - 6.0 * Z * Z;
  const double E3 = (3.0 * X * Y - 8.0 * Z * Z) * Z;
  const double E4 = 3.0 * (X * Y - Z * Z) * Z * Z;
  const double E5 = X * Y * Z * Z * Z;
  const double series = 1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0 -
                        3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0;
  return fn * std::pow(A, -1.5) * series + 3.0 * sum;
}

double rj(double x, double y, double z, double p) {
  if (!finite3(x, y, z) || !std::isfinite(p)) fail("rj", "arguments must be finite");
  if (x < 0.0 || y < 0.0 || z < 0.0) fail("rj", "requires x, y, z >= 0");
  if (p <= 0.0) fail("rj", "requires p > 0");
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  if (y <= 0.0) fail("rj", "at most one of x, y, z may be zero");

  const double x0 = x, y0 = y, z0 = z;
  const double delta = (p - x) * (p - y) * (p - z);
  double A = (x + y + z + 2.0 * p) / 5.0;
  const double A0 = A;
  double fn = 1.0;
  double sum = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const double spread = std::max({std::abs(A - x), std::abs(A - y),
                                    std::abs(A - z), std::abs(A - p)});
    if (spread < kSpreadTol * A) break;
    const double rx = std::sqrt(x), ry = std::sqrt(y), rz = std::sqrt(z),
                 rp = std::sqrt(p);
    const double lam = rx * ry + ry * rz + rz * rx;
    const double d = (rp + rx) * (rp + ry) * (rp + rz);
    const double e = delta * (fn * fn * fn) / (d * d);
    if (1.0 + e <= 0.0)
      throw convergence_error("carlson::rj: rc argument left the real domain");
    sum += fn / d * rc(1.0, 1.0 + e);
    A = (A + lam) * 0.25;
    x = (x + lam) * 0.25;
    y = (y + lam) * 0.25;
    z = (z + lam) * 0.25;
    p = (p + lam) * 0.25;
    fn *= 0.25;
  }
  const double X = (A0 - x0) * fn / A;
  const double Y = (A0 - y0) * fn / A;
  const double Z = (A0 - z0) * fn / A;
  const double P = -(X + Y + Z) / 2.0;
  const double E2 = X * Y + X * Z + Y * Z - 3.0 * P * P;
  const double E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * P * P * P;
  const double E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * P * P * P) * P;
  const double E5 = X * Y * Z * P * P;
  const double series = 1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0 -
                        3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0;
  return fn * std::pow(A, -1.5) * series + 6.0 * sum;
}

namespace {

// Divided difference (rd(y,z,x) - rd(x,y,z)) / (2(x - z)) with respect to the
// first argument slot; symmetric perturbation fallback when x ~= z.  The
// fallback step is scaled by the pair being differenced, not by the third
// argument: max(x, z) >= x(1 - 1e-6) inside the window, so x - h stays
// positive even when y dwarfs both.
double rd_diff_x(double x, double y, double z) {
  const double scale = std::max(x, z);
  if (std::abs(x - z) >= 1e-6 * scale) {
    return (rd(y, z, x) - rd(x, y, z)) / (2.0 * (x - z));
  }
  const double h = 1e-6 * scale;
  const double qp = (rd(y, z, x + h) - rd(x + h, y, z)) / (2.0 * (x + h - z));
  const double qm = (rd(y, z, x - h) - rd(x - h, y, z)) / (2.0 * (x - h - z));
  return 0.5 * (qp + qm);
}

}  // namespace

RdPartials rd_partials(double x, double y, double z) {
  if (!finite3(x, y, z)) fail("rd_partials", "arguments must be finite");
  if (x <= 0.0 || y <= 0.0 || z <= 0.0) fail("rd_partials", "arguments must be positive");
  RdPartials p{};
  p.dx = rd_diff_x(x, y, z);
  p.dy = rd_diff_x(y, x, z);  // rd is symmetric in (x, y)
  p.dz = -1.5 / (std::sqrt(x) * std::sqrt(y) * z * std::sqrt(z)) - p.dx - p.dy;
  return p;
}

double rd_zx_gap(double m, double y) {
  if (!std::isfinite(m) || !std::isfinite(y)) fail("rd_zx_gap", "arguments must be finite");
  if (m <= 0.0 || y <= 0.0) fail("rd_zx_gap", "arguments must be positive");
  // Both one-argument derivatives at (m, y, m) reduce to Euler integrals with
  // the same weight, and their gap is -(3/2) J with
  //   J = int_0^inf (t + m)^-3 (t + y)^-1/2 dt.
  const double c = m - y;
  double J;
  if (std::abs(c) <= 0.5 * m) {
    // Binomial expansion of (t + y)^-1/2 = (t + m)^-1/2 (1 - c/(t + m))^-1/2,
    // integrated term by term: J = m^-5/2 sum_k binom(2k,k) 4^-k q^k / (k + 5/2)
    // with q = c/m.  |q| <= 1/2, so terms decay like 2^-k.
    const double q = c / m;
    double term = 0.4;  // k = 0: 1 / (5/2)
    double sum = term;
    for (int k = 0; k < 200; ++k) {
      term *= q * (2 * k + 1) / (2.0 * (k + 1)) * ((k + 2.5) / (k + 3.5));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    J = sum / (m * m * std::sqrt(m));
  } else if (c > 0.0) {
    // Substituting s = sqrt(t + y) gives J = 2 I_3 with I_n the tail integral
    // of (s^2 + c)^-n from sqrt(y); integration by parts steps n up:
    //   I_{n+1} = ((2n - 1) I_n - sqrt(y) m^-n) / (2 n c).
    const double ry = std::sqrt(y);
    const double i1 = std::atan(std::sqrt(c / y)) / std::sqrt(c);
    const double i2 = (i1 - ry / m) / (2.0 * c);
    const double i3 = (3.0 * i2 - ry / (m * m)) / (4.0 * c);
    J = 2.0 * i3;
  } else {
    // Same ladder with s^2 - g, g = y - m.  I_1 = atanh(sqrt(g/y)) / sqrt(g),
    // rewritten through log so that nothing cancels as g/y -> 1:
    //   atanh(u) = log((1 + u)^2 / (1 - u^2)) / 2 and 1 - g/y = m/y.
    const double g = y - m;
    const double ry = std::sqrt(y);
    const double u = std::sqrt(g / y);
    const double i1 = 0.5 * std::log((1.0 + u) * (1.0 + u) * (y / m)) / std::sqrt(g);
    const double i2 = (ry / m - i1) / (2.0 * g);
    const double i3 = (ry / (m * m) - 3.0 * i2) / (4.0 * g);
    J = 2.0 * i3;
  }
  return -1.5 * J;
}

}  // namespace acgc::carlson
