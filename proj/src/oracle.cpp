#include "acgc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "acgc/quadrature.hpp"

namespace acgc::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void fail(const char* fn, const char* msg) {
  throw std::domain_error(std::string("oracle::") + fn + ": " + msg);
}

// v in [0,1] raised to a positive integer power without pow().
double ipow(double v, int m) {
  double r = 1.0;
  for (int k = 0; k < m; ++k) r *= v;
  return r;
}

// Regularizing substitution order for an endpoint factor t^(alpha-1):
// t = v^m.  Bounded is not enough for the bisection budget; the alphas
// that occur are half-integers, so m = 1 (integer alpha) or m = 2 makes
// the transformed exponent m*alpha - 1 a nonnegative integer and the
// endpoint analytic.  Anything else gets at least three derivatives.
int power_order(double alpha) {
  if (alpha == std::floor(alpha)) return 1;
  if (2.0 * alpha == std::floor(2.0 * alpha)) return 2;
  int m = 2;
  while (m * alpha < 4.0) ++m;
  return m;
}

}  // namespace

double r_hyper(const HyperParams& p) {
  const std::size_t n = p.b.size();
  if (n == 0 || p.z.size() != n) {
    fail("r_hyper", "b and z must be equally sized and nonempty");
  }
  if (!(p.a > 0.0) || !std::isfinite(p.a)) fail("r_hyper", "requires a > 0");
  double bsum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(p.b[j]) || !std::isfinite(p.z[j]) || p.z[j] < 0.0) {
      fail("r_hyper", "arguments must be finite and nonnegative");
    }
    bsum += p.b[j];
  }
  const double aprime = bsum - p.a;
  if (!(aprime > 0.0)) fail("r_hyper", "requires sum(b) - a > 0");

  // Fold z_j = 0 factors into the left endpoint exponent.
  double alpha_left = aprime;
  std::vector<double> bpos, zpos;
  for (std::size_t j = 0; j < n; ++j) {
    if (p.z[j] == 0.0) {
      alpha_left -= p.b[j];
    } else {
      bpos.push_back(p.b[j]);
      zpos.push_back(p.z[j]);
    }
  }
  if (!(alpha_left > 0.0)) {
    fail("r_hyper", "zero arguments make the integral diverge");
  }

  // [0,1]: t = v^mL regularizes t^(alpha_left - 1).
  const int mL = power_order(alpha_left);
  auto left = [&](double v) {
    const double t = ipow(v, mL);
    double g = mL * std::pow(v, mL * alpha_left - 1.0);
    for (std::size_t j = 0; j < bpos.size(); ++j) {
      g *= std::pow(t + zpos[j], -bpos[j]);
    }
    return g;
  };
  // [1,inf): t = 1/u turns the integrand into u^(a-1) prod (1+z_j u)^(-b_j);
  // u = v^mR regularizes the new endpoint.
  const int mR = power_order(p.a);
  auto right = [&](double v) {
    const double u = ipow(v, mR);
    double g = mR * std::pow(v, mR * p.a - 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      g *= std::pow(1.0 + p.z[j] * u, -p.b[j]);
    }
    return g;
  };

  const quadrature::GaussLegendre probe(15);
  const double rough =
      std::abs(probe.apply(left, 0.0, 1.0)) + std::abs(probe.apply(right, 0.0, 1.0));
  const double tol = 1e-12 * std::max(1.0, rough);
  const double integral = quadrature::integrate(left, 0.0, 1.0, tol) +
                          quadrature::integrate(right, 0.0, 1.0, tol);

  const double log_beta = std::lgamma(p.a) + std::lgamma(aprime) -
                          std::lgamma(p.a + aprime);
  return std::exp(-log_beta) * integral;
}

namespace {

void check_positive(const char* fn, const EigenTriple& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(b[i] > 0.0) || !std::isfinite(b[i])) {
      fail(fn, "concentration eigenvalues must be positive and finite");
    }
  }
}

struct SphereMoments {
  SymTensor2 second;
  SymTensor4 fourth;
};

// One product-rule pass: nodes Gauss-Legendre in z = cos(theta), 2*npolar
// uniform midpoints in phi, ACG density det(B)^(1/2)/(4 pi) (p.Bp)^(-3/2).
SphereMoments sphere_pass(const EigenTriple& b, int npolar) {
  const quadrature::GaussLegendre rule(npolar);
  const int nphi = 2 * npolar;
  const double wphi = kTwoPi / nphi;
  const double pref = std::sqrt(b.product()) / (4.0 * std::numbers::pi);

  SphereMoments acc{};
  for (int iz = 0; iz < npolar; ++iz) {
    const double z = rule.nodes[static_cast<std::size_t>(iz)];
    const double wz = rule.weights[static_cast<std::size_t>(iz)];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int ip = 0; ip < nphi; ++ip) {
      const double phi = wphi * (ip + 0.5);
      const double pv[3] = {rho * std::cos(phi), rho * std::sin(phi), z};
      const double quad = b[0] * pv[0] * pv[0] + b[1] * pv[1] * pv[1] +
                          b[2] * pv[2] * pv[2];
      const double w = wz * wphi * pref / (quad * std::sqrt(quad));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
          acc.second(i, j) += w * pv[i] * pv[j];
        }
      }
      for (std::size_t s = 0; s < 15; ++s) {
        const auto& q = acgc::detail::kQuartics[s];
        acc.fourth.m[s] += w * pv[q[0]] * pv[q[1]] * pv[q[2]] * pv[q[3]];
      }
    }
  }
  return acc;
}

SphereMoments sphere_refine(const EigenTriple& b, QuadInfo* info) {
  check_positive("sphere_moment", b);
  const bool window = b.min_value() >= 0.02 && b.max_value() <= 50.0;
  SphereMoments prev = sphere_pass(b, 128);
  int n = 128;
  bool converged = false;
  while (n < 1024) {
    n *= 2;
    SphereMoments next = sphere_pass(b, n);
    double diff = 0.0;
    for (std::size_t s = 0; s < 6; ++s) {
      diff = std::max(diff, std::abs(next.second.m[s] - prev.second.m[s]));
    }
    for (std::size_t s = 0; s < 15; ++s) {
      diff = std::max(diff, std::abs(next.fourth.m[s] - prev.fourth.m[s]));
    }
    prev = next;
    if (diff <= 1e-9) {
      converged = true;
      break;
    }
  }
  if (info != nullptr) *info = {n, converged, window};
  return prev;
}

}  // namespace

SymTensor2 sphere_moment2(const EigenTriple& b, QuadInfo* info) {
  return sphere_refine(b, info).second;
}

SymTensor4 sphere_moment4(const EigenTriple& b, QuadInfo* info) {
  return sphere_refine(b, info).fourth;
}

SymTensor4 aiv_t_integral(const EigenTriple& b) {
  check_positive("aiv_t_integral", b);
  const double half_logdet =
      0.5 * (std::log(b[0]) + std::log(b[1]) + std::log(b[2]));

  // I(i,j) = int_0^inf t (b_i+t)^-1 (b_j+t)^-1 / sqrt(prod_k (b_k+t)) dt
  // scaled by det(B)^(1/2) in log form; front segment direct, tail by
  // t = 1/u then u = v^2.
  auto segment_front = [&](std::size_t i, std::size_t j) {
    return [&b, i, j, half_logdet](double t) {
      const double logs = std::log(b[0] + t) + std::log(b[1] + t) +
                          std::log(b[2] + t);
      return t * std::exp(half_logdet - 0.5 * logs) /
             ((b[i] + t) * (b[j] + t));
    };
  };
  auto segment_tail = [&](std::size_t i, std::size_t j) {
    return [&b, i, j, half_logdet](double v) {
      const double u = v * v;
      const double logs = std::log(b[0] * u + 1.0) + std::log(b[1] * u + 1.0) +
                          std::log(b[2] * u + 1.0);
      return 2.0 * v * v * std::exp(half_logdet - 0.5 * logs) /
             ((b[i] * u + 1.0) * (b[j] * u + 1.0));
    };
  };

  SymTensor4 t{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const double integral =
          quadrature::integrate(segment_front(i, j), 0.0, 1.0, 1e-12) +
          quadrature::integrate(segment_tail(i, j), 0.0, 1.0, 1e-12);
      // S(M (x) M)_iiii = m_i^2 but _iijj = m_i m_j / 3 for i != j.
      t(i, i, j, j) = (i == j ? 0.75 : 0.25) * integral;
    }
  }
  return t;
}

namespace {

template <typename Accumulate>
void circle_refine(const char* fn, double b1, double b2, Accumulate&& pass) {
  if (!(b1 > 0.0) || !(b2 > 0.0) || !std::isfinite(b1) || !std::isfinite(b2)) {
    fail(fn, "concentrations must be positive and finite");
  }
  if (std::abs(b1 * b2 - 1.0) > 1e-10) fail(fn, "requires b1 b2 = 1");
  if (!pass()) {
    throw convergence_error(std::string("oracle::") + fn +
                            ": node doubling did not converge");
  }
}

}  // namespace

SymTensor2 circle_moment2(double b1, double b2) {
  SymTensor2 result{};
  auto doubling = [&]() {
    SymTensor2 prev{};
    for (int n = 64; n <= (1 << 16); n *= 2) {
      SymTensor2 cur{};
      for (int k = 0; k < n; ++k) {
        const double phi = kTwoPi * (k + 0.5) / n;
        const double c = std::cos(phi), s = std::sin(phi);
        const double w = 1.0 / (n * (b1 * c * c + b2 * s * s));
        cur(0, 0) += w * c * c;
        cur(1, 1) += w * s * s;
        cur(0, 1) += w * c * s;
      }
      double diff = 0.0;
      for (std::size_t i = 0; i < 6; ++i) {
        diff = std::max(diff, std::abs(cur.m[i] - prev.m[i]));
      }
      prev = cur;
      if (n > 64 && diff <= 1e-12) {
        result = cur;
        return true;
      }
    }
    return false;
  };
  circle_refine("circle_moment2", b1, b2, doubling);
  return result;
}

SymTensor4 circle_moment4(double b1, double b2) {
  SymTensor4 result{};
  auto doubling = [&]() {
    SymTensor4 prev{};
    for (int n = 64; n <= (1 << 16); n *= 2) {
      SymTensor4 cur{};
      for (int k = 0; k < n; ++k) {
        const double phi = kTwoPi * (k + 0.5) / n;
        const double c = std::cos(phi), s = std::sin(phi);
        const double w = 1.0 / (n * (b1 * c * c + b2 * s * s));
        cur(0, 0, 0, 0) += w * c * c * c * c;
        cur(0, 0, 0, 1) += w * c * c * c * s;
        cur(0, 0, 1, 1) += w * c * c * s * s;
        cur(0, 1, 1, 1) += w * c * s * s * s;
        cur(1, 1, 1, 1) += w * s * s * s * s;
      }
      double diff = 0.0;
      for (std::size_t i = 0; i < 15; ++i) {
        diff = std::max(diff, std::abs(cur.m[i] - prev.m[i]));
      }
      prev = cur;
      if (n > 64 && diff <= 1e-12) {
        result = cur;
        return true;
      }
    }
    return false;
  };
  circle_refine("circle_moment4", b1, b2, doubling);
  return result;
}

}  // namespace acgc::oracle
