#include "acgc/moment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "acgc/axial.hpp"
#include "acgc/carlson.hpp"
#include "acgc/lambert.hpp"

namespace acgc::moment {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kInf = std::numeric_limits<double>::infinity();

// a_i below this count as boundary zeros; dispatching below avoids feeding
// such states to Newton, whose b components would diverge.
constexpr double kBoundaryTol = 1e-10;
// a-pair coincidence threshold for the axially symmetric routes.
constexpr double kAxialTol = 1e-10;
// b-pair coincidence threshold switching the divided difference to its
// analytic limit.
constexpr double kPairTol = 1e-7;

[[noreturn]] void fail(const char* fn, const char* msg) {
  throw std::domain_error(std::string("moment::") + fn + ": " + msg);
}

void check_triple(const char* fn, const EigenTriple& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::isfinite(t[i])) fail(fn, "arguments must be finite");
  }
}

// Validates nonnegativity and |sum - 1| <= tol, then rescales exactly.
EigenTriple simplex_normalize(const char* fn, const EigenTriple& a,
                              double tol) {
  check_triple(fn, a);
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] < 0.0) fail(fn, "moment eigenvalues must be nonnegative");
  }
  const double s = a.sum();
  if (std::abs(s - 1.0) > tol) fail(fn, "moment eigenvalues must sum to 1");
  return {a[0] / s, a[1] / s, a[2] / s};
}

// Validates positivity and |b1 b2 b3 - 1| <= 1e-8, then rescales each
// component by the cube root of the determinant.
EigenTriple det_normalize(const char* fn, const EigenTriple& b) {
  check_triple(fn, b);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(b[i] > 0.0)) fail(fn, "concentration eigenvalues must be positive");
  }
  const double det = b.product();
  if (std::abs(det - 1.0) > 1e-8) fail(fn, "determinant must be 1");
  const double s = std::cbrt(det);
  return {b[0] / s, b[1] / s, b[2] / s};
}

// Divided difference (a_i b_i - a_j b_j)/(b_i - b_j) of the closure
// formula; k is the remaining index.  A coincident pair takes the limit
// R_D(m,b_k,m)/3 + (m/3)(dR_D/dz - dR_D/dx)(m,b_k,m) at the midpoint m.
double pair_dd(const EigenTriple& a, const EigenTriple& b, std::size_t i,
               std::size_t j, std::size_t k) {
  if (std::abs(b[i] - b[j]) >= kPairTol * b.max_value()) {
    return (a[i] * b[i] - a[j] * b[j]) / (b[i] - b[j]);
  }
  const double m = 0.5 * (b[i] + b[j]);
  return carlson::rd(m, b[k], m) / 3.0 + m / 3.0 * carlson::rd_zx_gap(m, b[k]);
}

}  // namespace

EigenTriple a_from_b(const EigenTriple& b_in) {
  const EigenTriple b = det_normalize("a_from_b", b_in);
  return {carlson::rd(b[1], b[2], b[0]) / 3.0,
          carlson::rd(b[0], b[2], b[1]) / 3.0,
          carlson::rd(b[0], b[1], b[2]) / 3.0};
}

EigenTriple b_from_a(const EigenTriple& a_in, NewtonReport* report) {
  const EigenTriple a = simplex_normalize("b_from_a", a_in, 1e-8);
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] < kBoundaryTol) {
      fail("b_from_a",
           "boundary state; use the planar or unidirectional paths");
    }
  }

  // b grows where a is small; the det-normalized reciprocal is exact at
  // isotropy and preserves the ordering.
  const double geo = std::cbrt(1.0 / a.product());
  double u1 = std::log(1.0 / (a[0] * geo)), u2 = std::log(1.0 / (a[1] * geo));

  EigenTriple b;
  double r1 = 0.0, r2 = 0.0;
  auto evaluate = [&a](double v1, double v2, EigenTriple& bv, double& e1,
                       double& e2) {
    bv = EigenTriple{std::exp(v1), std::exp(v2), std::exp(-v1 - v2)};
    e1 = carlson::rd(bv[1], bv[2], bv[0]) / 3.0 - a[0];
    e2 = carlson::rd(bv[0], bv[2], bv[1]) / 3.0 - a[1];
  };
  evaluate(u1, u2, b, r1, r2);

  constexpr double kResTol = 1e-13;
  constexpr int kMaxIter = 50;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double resid = std::max(std::abs(r1), std::abs(r2));
    if (resid < kResTol) {
      if (report != nullptr) *report = {iter, resid};
      return b;
    }

    // d a_i / d ln b_m through both the direct slot and b3 = 1/(b1 b2).
    const carlson::RdPartials p1 = carlson::rd_partials(b[1], b[2], b[0]);
    const carlson::RdPartials p2 = carlson::rd_partials(b[0], b[2], b[1]);
    const double j11 = (b[0] * p1.dz - b[2] * p1.dy) / 3.0;
    const double j12 = (b[1] * p1.dx - b[2] * p1.dy) / 3.0;
    const double j21 = (b[0] * p2.dx - b[2] * p2.dy) / 3.0;
    const double j22 = (b[1] * p2.dz - b[2] * p2.dy) / 3.0;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) {
      throw convergence_error("moment::b_from_a: singular Newton system");
    }
    const double du1 = (-j22 * r1 + j12 * r2) / det;
    const double du2 = (j21 * r1 - j11 * r2) / det;

    // Backtrack by halving until the residual norm decreases; keep the
    // final trial either way (full steps win almost always).
    const double norm0 = std::hypot(r1, r2);
    double alpha = 1.0;
    EigenTriple bn;
    double n1 = 0.0, n2 = 0.0;
    for (int halving = 0; halving < 20; ++halving) {
      evaluate(u1 + alpha * du1, u2 + alpha * du2, bn, n1, n2);
      if (std::hypot(n1, n2) < norm0) break;
      alpha *= 0.5;
    }
    u1 += alpha * du1;
    u2 += alpha * du2;
    b = bn;
    r1 = n1;
    r2 = n2;
  }
  throw convergence_error(
      "moment::b_from_a: Newton failed to reach 1e-13 in 50 iterations");
}

double axial_forward(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    fail("axial_forward", "concentration must be positive and finite");
  }
  return axial::f_axial(std::pow(beta, 0.75));
}

double axial_invert(double a) {
  if (!(a > 1e-12) || !(a < 1.0 - 1e-12)) {
    fail("axial_invert", "moment must lie in (1e-12, 1 - 1e-12)");
  }
  const double third = 1.0 / 3.0;
  double x = 1.0;
  if (a != third) {
    double lo, hi;
    if (a < third) {
      lo = 1.0;
      hi = 2.0;
      while (axial::f_axial(hi) > a) hi *= 4.0;
    } else {
      hi = 1.0;
      lo = 0.5;
      while (axial::f_axial(lo) < a) lo *= 0.25;
    }
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (axial::f_axial(mid) > a ? lo : hi) = mid;
      if (hi - lo < 1e-16 * mid) break;
    }
    x = 0.5 * (lo + hi);
  }
  return std::pow(x, 4.0 / 3.0);
}

namespace detail {

SymTensor4 closure_from_pair(const EigenTriple& a, const EigenTriple& b) {
  SymTensor4 t{};
  t(0, 0, 1, 1) = 0.5 * pair_dd(a, b, 0, 1, 2);
  t(0, 0, 2, 2) = 0.5 * pair_dd(a, b, 0, 2, 1);
  t(1, 1, 2, 2) = 0.5 * pair_dd(a, b, 1, 2, 0);
  // Diagonal by the telescoping contraction sum_j A_iijj = a_i.
  t(0, 0, 0, 0) = a[0] - t(0, 0, 1, 1) - t(0, 0, 2, 2);
  t(1, 1, 1, 1) = a[1] - t(0, 0, 1, 1) - t(1, 1, 2, 2);
  t(2, 2, 2, 2) = a[2] - t(0, 0, 2, 2) - t(1, 1, 2, 2);
  return t;
}

}  // namespace detail

SymTensor4 exact_closure(const EigenTriple& a_in, const EigenTriple& b_in) {
  const EigenTriple a = simplex_normalize("exact_closure", a_in, 1e-8);
  const EigenTriple b = det_normalize("exact_closure", b_in);
  const EigenTriple check = a_from_b(b);
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(check[i] - a[i]) > 1e-8) {
      fail("exact_closure", "a and b are not a consistent pair");
    }
  }
  return detail::closure_from_pair(a, b);
}

EigenTriple planar_b_from_a(const EigenTriple& a_in) {
  check_triple("planar_b_from_a", a_in);
  int zero = -1;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a_in[i] < 0.0) fail("planar_b_from_a", "negative eigenvalue");
    if (a_in[i] <= 1e-14) {
      if (zero >= 0) fail("planar_b_from_a", "more than one vanishing eigenvalue");
      zero = static_cast<int>(i);
    }
  }
  if (zero < 0) fail("planar_b_from_a", "one eigenvalue must vanish");
  const std::size_t p = (zero == 0) ? 1 : 0;
  const std::size_t q = (zero == 2) ? 1 : 2;
  const double s = a_in[p] + a_in[q];
  if (std::abs(s - 1.0) > 1e-8) {
    fail("planar_b_from_a", "in-plane eigenvalues must sum to 1");
  }
  EigenTriple b;
  b[p] = 1.0 / (a_in[p] / s) - 1.0;
  b[q] = 1.0 / (a_in[q] / s) - 1.0;
  b[static_cast<std::size_t>(zero)] = kInf;
  return b;
}

SymTensor4 planar_closure(const EigenTriple& a_in) {
  check_triple("planar_closure", a_in);
  EigenTriple a;
  double s = 0.0;
  bool boundary = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a_in[i] < 0.0) fail("planar_closure", "negative eigenvalue");
    a[i] = (a_in[i] <= 1e-14) ? 0.0 : a_in[i];
    if (a[i] == 0.0) boundary = true;
    s += a[i];
  }
  if (!boundary) fail("planar_closure", "one eigenvalue must vanish");
  if (std::abs(s - 1.0) > 1e-8) {
    fail("planar_closure", "eigenvalues must sum to 1");
  }
  SymTensor4 t{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      t(i, i, j, j) = 0.5 * (a[i] / s) * (a[j] / s + (i == j ? 1.0 : 0.0));
    }
  }
  return t;
}

// Both asymptotes phrase -e^2 a / 2 as -e^-1 * (a / (2 e^-3)) so that at
// the shared boundary a = 2 e^-3 the argument is exactly the represented
// branch point, W and log both come out exactly -1, and the two formulas
// coincide bit for bit as the algebra says they must.
double aiiii_asym1(double a) {
  if (!(a > 0.0) || a > 2.0 * std::exp(-3.0)) {
    fail("aiiii_asym1", "domain is (0, 2 e^-3]");
  }
  const double arg = -std::exp(-1.0) * (a / (2.0 * std::exp(-3.0)));
  return (3.0 * a - 1.0) / (2.0 + lambert::w_m1(arg) / a);
}

double aiiii_asym2(double a) {
  if (!(a > 0.0) || a >= 2.0 * std::exp(-2.0)) {
    fail("aiiii_asym2", "domain is (0, 2 e^-2)");
  }
  const double arg = std::exp(-1.0) * (a / (2.0 * std::exp(-3.0)));
  const double denom = 2.0 + std::log(arg) / a;
  if (denom == 0.0) fail("aiiii_asym2", "formula pole");
  return (3.0 * a - 1.0) / denom;
}

double aiiii_asym4(double a) {
  if (!(a > 0.0) || a > 1.0) fail("aiiii_asym4", "domain is (0, 1]");
  const double d = a - 1.0;
  return (3.0 * a - 1.0) / (2.0 - 8.0 / (kPi * kPi) * d * d);
}

double aiiii_asym5(double a) {
  const double radicand = 32.0 * (a - 1.0) + kPi * kPi;
  if (!(radicand >= 0.0)) fail("aiiii_asym5", "requires a >= 1 - pi^2/32");
  const double r = kPi - std::sqrt(radicand);
  return (3.0 * a - 1.0) / (2.0 - r * r / 32.0);
}

namespace {

// Index of the eigenvalue distinct from the (nearly) equal pair, or -1.
// Isotropic triples match the first test and behave like any other
// axial state with beta = 1.
int axial_distinct_index(const EigenTriple& a) {
  if (std::abs(a[0] - a[1]) <= kAxialTol) return 2;
  if (std::abs(a[0] - a[2]) <= kAxialTol) return 1;
  if (std::abs(a[1] - a[2]) <= kAxialTol) return 0;
  return -1;
}

ClosureResult unidirectional_result(const EigenTriple& a) {
  std::size_t major = 0;
  if (a[1] > a[major]) major = 1;
  if (a[2] > a[major]) major = 2;
  ClosureResult r{};
  r.A(major, major, major, major) = 1.0;
  r.b = {kInf, kInf, kInf};
  r.b[major] = 0.0;
  r.route = ClosureMethod::Unidirectional;
  return r;
}

ClosureResult planar_result(const EigenTriple& a) {
  EigenTriple cleaned = a;
  for (std::size_t i = 0; i < 3; ++i) {
    if (cleaned[i] < kBoundaryTol) cleaned[i] = 0.0;
  }
  return {planar_closure(cleaned), planar_b_from_a(cleaned),
          ClosureMethod::Planar};
}

// Axially symmetric exact / asymptotic tensor from the distinct moment
// eigenvalue and a concentration beta for its axis.
ClosureResult axial_result(const EigenTriple& a, int d, double beta,
                           ClosureMethod route) {
  const std::size_t di = static_cast<std::size_t>(d);
  EigenTriple a_sym, b;
  a_sym[di] = a[di];
  b[di] = beta;
  const double pair_a = 0.5 * (1.0 - a[di]);
  const double pair_b = 1.0 / std::sqrt(beta);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != di) {
      a_sym[i] = pair_a;
      b[i] = pair_b;
    }
  }
  return {detail::closure_from_pair(a_sym, b), b, route};
}

}  // namespace

ClosureResult closure_full(const EigenTriple& a_in, ClosureMethod method) {
  const EigenTriple a = simplex_normalize("closure", a_in, 1e-8);
  int zeros = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] < kBoundaryTol) ++zeros;
  }
  const int d = axial_distinct_index(a);

  switch (method) {
    case ClosureMethod::Unidirectional:
      if (zeros != 2) {
        fail("closure", "unidirectional method needs two vanishing eigenvalues");
      }
      return unidirectional_result(a);

    case ClosureMethod::Planar:
      if (zeros == 2) return unidirectional_result(a);
      if (zeros != 1) {
        fail("closure", "planar method needs a vanishing eigenvalue");
      }
      return planar_result(a);

    case ClosureMethod::Exact: {
      if (zeros == 2) return unidirectional_result(a);
      if (zeros == 1) return planar_result(a);
      if (d >= 0) {
        return axial_result(a, d, axial_invert(a[static_cast<std::size_t>(d)]),
                            ClosureMethod::Exact);
      }
      NewtonReport rep;
      const EigenTriple b = b_from_a(a, &rep);
      return {detail::closure_from_pair(a, b), b, ClosureMethod::Exact};
    }

    case ClosureMethod::Asym1:
    case ClosureMethod::Asym2:
    case ClosureMethod::Asym4:
    case ClosureMethod::Asym5: {
      if (zeros != 0 || d < 0) {
        fail("closure",
             "asymptotic methods need an interior axially symmetric state");
      }
      const double ad = a[static_cast<std::size_t>(d)];
      double x = 0.0;
      switch (method) {
        case ClosureMethod::Asym1:
          x = axial::inv_asym_zero(ad);
          break;
        case ClosureMethod::Asym2: {
          if (!(ad < 2.0 * std::exp(-2.0))) {
            fail("closure", "asym2 needs a < 2 e^-2");
          }
          x = std::sqrt(-std::log(kE * kE * ad / 2.0) / (2.0 * ad));
          break;
        }
        case ClosureMethod::Asym4:
          x = axial::inv_first_order_one(ad);
          break;
        default:
          x = axial::inv_second_order_one(ad);
          break;
      }
      if (!(x > 0.0)) fail("closure", "asymptotic inverse left the domain");
      return axial_result(a, d, std::pow(x, 4.0 / 3.0), method);
    }
  }
  fail("closure", "unknown method");
}

SymTensor4 closure(const EigenTriple& a, ClosureMethod method) {
  return closure_full(a, method).A;
}

}  // namespace acgc::moment

namespace acgc {

std::string to_string(ClosureMethod m) {
  switch (m) {
    case ClosureMethod::Exact: return "exact";
    case ClosureMethod::Planar: return "planar";
    case ClosureMethod::Unidirectional: return "unidirectional";
    case ClosureMethod::Asym1: return "asym1";
    case ClosureMethod::Asym2: return "asym2";
    case ClosureMethod::Asym4: return "asym4";
    case ClosureMethod::Asym5: return "asym5";
  }
  return "unknown";
}

ClosureMethod closure_method_from_string(const std::string& name) {
  if (name == "exact") return ClosureMethod::Exact;
  if (name == "planar") return ClosureMethod::Planar;
  if (name == "unidirectional") return ClosureMethod::Unidirectional;
  if (name == "asym1") return ClosureMethod::Asym1;
  if (name == "asym2") return ClosureMethod::Asym2;
  if (name == "asym4") return ClosureMethod::Asym4;
  if (name == "asym5") return ClosureMethod::Asym5;
  throw std::invalid_argument("unknown closure method: " + name);
}

}  // namespace acgc
