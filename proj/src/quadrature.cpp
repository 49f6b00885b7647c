#include "acgc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "acgc/tensor.hpp"

namespace acgc::quadrature {

namespace {

// Newton on P_n(x) = 0 from the asymptotic node guesses; the derivative
// comes from the standard recurrence (1-x^2) P_n' = n (P_{n-1} - x P_n).
void legendre_rule(int n, std::vector<double>& nodes,
                   std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (p0 - x * p1) / (1.0 - x * x);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

const GaussLegendre& cached_rule(int n) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
  return it->second;
}

double panel(const GaussLegendre& rule, const std::function<double(double)>& f,
             double a, double b) {
  const double mid = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + halfwidth * rule.nodes[i]);
  }
  return acc * halfwidth;
}

double refine(const std::function<double(double)>& f, double a, double b,
              double tol, int depth, double span) {
  const GaussLegendre& g7 = cached_rule(7);
  const GaussLegendre& g15 = cached_rule(15);
  const double coarse = panel(g7, f, a, b);
  const double fine = panel(g15, f, a, b);
  if (std::abs(fine - coarse) <= tol * ((b - a) / span)) return fine;
  if (depth <= 0) {
    throw convergence_error("quadrature::integrate: bisection depth exhausted");
  }
  const double mid = 0.5 * (a + b);
  return refine(f, a, mid, tol, depth - 1, span) +
         refine(f, mid, b, tol, depth - 1, span);
}

}  // namespace

GaussLegendre::GaussLegendre(int n) {
  if (n < 1) throw std::domain_error("quadrature::GaussLegendre: n < 1");
  legendre_rule(n, nodes, weights);
}

double GaussLegendre::apply(const std::function<double(double)>& f, double a,
                            double b) const {
  return panel(*this, f, a, b);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_depth) {
  if (!(b > a)) throw std::domain_error("quadrature::integrate: empty range");
  return refine(f, a, b, tol, max_depth, b - a);
}

}  // namespace acgc::quadrature
