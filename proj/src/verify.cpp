#include "acgc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "acgc/axial.hpp"
#include "acgc/carlson.hpp"
#include "acgc/lambert.hpp"
#include "acgc/moment.hpp"
#include "acgc/oracle.hpp"
#include "acgc/tensor.hpp"

namespace acgc::verify {

namespace {

const double kPi = std::acos(-1.0);
const double kE = std::exp(1.0);

Check make(std::string name, double value, double tolerance) {
  const bool ok = std::isfinite(value) && value <= tolerance;
  return {std::move(name), value, tolerance, ok};
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

double rel(double got, double want) { return std::fabs(got / want - 1.0); }

// x in (0,1) mapped onto the simplex interior; smallest component stays
// around 1e-2 so every state is Newton-friendly.
EigenTriple random_simplex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.02, 1.0);
  const double x = u(rng), y = u(rng), z = u(rng);
  const double s = x + y + z;
  return {x / s, y / s, z / s};
}

EigenTriple random_unit_det_b(std::mt19937_64& rng, double lo, double hi) {
  const double x = log_uniform(rng, lo, hi);
  const double y = log_uniform(rng, lo, hi);
  const double z = log_uniform(rng, lo, hi);
  const double g = std::cbrt(x * y * z);
  return {x / g, y / g, z / g};
}

Check rc_closed_forms() {
  const double e1 =
      rel(carlson::rc(0.25, 1.0), 2.0 * kPi / (3.0 * std::sqrt(3.0)));
  const double e2 = rel(carlson::rc(4.0, 1.0),
                        std::log(2.0 + std::sqrt(3.0)) / std::sqrt(3.0));
  return make("rc_closed_forms", std::max(e1, e2), 1e-14);
}

Check carlson_homogeneity() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double x = log_uniform(rng, 0.1, 10.0);
    const double y = log_uniform(rng, 0.1, 10.0);
    const double z = log_uniform(rng, 0.1, 10.0);
    const double p = log_uniform(rng, 0.1, 10.0);
    const double lam = log_uniform(rng, 0.1, 10.0);
    const double s = std::sqrt(lam), s3 = lam * std::sqrt(lam);
    worst = std::max(
        worst, rel(carlson::rf(lam * x, lam * y, lam * z) * s,
                   carlson::rf(x, y, z)));
    worst = std::max(
        worst, rel(carlson::rd(lam * x, lam * y, lam * z) * s3,
                   carlson::rd(x, y, z)));
    worst = std::max(
        worst, rel(carlson::rj(lam * x, lam * y, lam * z, lam * p) * s3,
                   carlson::rj(x, y, z, p)));
  }
  return make("carlson_homogeneity", worst, 1e-13);
}

// rd(x,y,z) + rd(y,z,x) + rd(z,x,y) = 3 (xyz)^{-1/2}
Check rd_sum_identity() {
  std::mt19937_64 rng(102);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double x = log_uniform(rng, 0.05, 50.0);
    const double y = log_uniform(rng, 0.05, 50.0);
    const double z = log_uniform(rng, 0.05, 50.0);
    const double sum = carlson::rd(x, y, z) + carlson::rd(y, z, x) +
                       carlson::rd(z, x, y);
    worst = std::max(worst, rel(sum, 3.0 / std::sqrt(x * y * z)));
  }
  return make("rd_sum_identity", worst, 1e-12);
}

// x rd(y,z,x) + y rd(z,x,y) + z rd(x,y,z) = 3 rf(x,y,z)
Check rd_weighted_sum_rf() {
  std::mt19937_64 rng(111);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double x = log_uniform(rng, 0.05, 50.0);
    const double y = log_uniform(rng, 0.05, 50.0);
    const double z = log_uniform(rng, 0.05, 50.0);
    const double sum = x * carlson::rd(y, z, x) + y * carlson::rd(z, x, y) +
                       z * carlson::rd(x, y, z);
    worst = std::max(worst, rel(sum, 3.0 * carlson::rf(x, y, z)));
  }
  return make("rd_weighted_sum_rf", worst, 1e-12);
}

Check rf_degenerate_rc() {
  std::mt19937_64 rng(103);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double x = log_uniform(rng, 0.05, 50.0);
    const double y = log_uniform(rng, 0.05, 50.0);
    worst = std::max(worst, rel(carlson::rf(x, y, y), carlson::rc(x, y)));
  }
  return make("rf_degenerate_rc", worst, 1e-13);
}

Check rj_reduces_to_rd() {
  std::mt19937_64 rng(104);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double x = log_uniform(rng, 0.05, 50.0);
    const double y = log_uniform(rng, 0.05, 50.0);
    const double z = log_uniform(rng, 0.05, 50.0);
    worst = std::max(worst,
                     rel(carlson::rj(x, y, z, z), carlson::rd(x, y, z)));
  }
  return make("rj_reduces_to_rd", worst, 1e-12);
}

// rd = -6 d(rf)/dz, probed by central differences.
Check rd_from_rf_derivative() {
  std::mt19937_64 rng(105);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double x = log_uniform(rng, 0.3, 3.0);
    const double y = log_uniform(rng, 0.3, 3.0);
    const double z = log_uniform(rng, 0.3, 3.0);
    const double h = 1e-5 * z;
    const double fd =
        (carlson::rf(x, y, z + h) - carlson::rf(x, y, z - h)) / (2.0 * h);
    worst = std::max(worst, rel(-6.0 * fd, carlson::rd(x, y, z)));
  }
  return make("rd_from_rf_derivative", worst, 1e-8);
}

Check limit_xrd_3() {
  const double x = 1e-6;
  const double v = x * carlson::rd(1.0, 1.0, x * x);
  return make("limit_xRD_3", std::fabs(v - 3.0), 1e-4);
}

Check lemma_branch(const char* name, double lo, double hi) {
  double worst = 0.0;
  const int n = 100;
  const double step = std::log(hi / lo) / (n - 1);
  for (int k = 0; k < n; ++k) {
    const double x = lo * std::exp(k * step);
    const double lhs = x * carlson::rd(1.0, 1.0, x * x) / 3.0;
    worst = std::max(worst, rel(lhs, axial::f_axial(x)));
  }
  return make(name, worst, 1e-11);
}

Check lambert_residual() {
  double worst = 0.0;
  const double lo = 1e-30, hi = (1.0 - 1e-9) / kE;
  const int n = 100;
  const double step = std::log(hi / lo) / (n - 1);
  for (int k = 0; k < n; ++k) {
    const double x = -lo * std::exp(k * step);
    const double w = lambert::w_m1(x);
    worst = std::max(worst, std::fabs(w * std::exp(w) / x - 1.0));
  }
  return make("lambert_residual", worst, 1e-13);
}

Check lambert_branch_point() {
  const double w = lambert::w_m1(-1.0 / kE);
  return make("lambert_branch_point", std::fabs(w + 1.0), 1e-8);
}

Check hypergeometric_oracle() {
  std::mt19937_64 rng(106);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double x = log_uniform(rng, 0.1, 10.0);
    const double y = log_uniform(rng, 0.1, 10.0);
    const double z = log_uniform(rng, 0.1, 10.0);
    const double p = log_uniform(rng, 0.1, 10.0);
    worst = std::max(
        worst, rel(oracle::r_hyper({0.5, {0.5, 0.5, 0.5}, {x, y, z}}),
                   carlson::rf(x, y, z)));
    worst = std::max(
        worst, rel(oracle::r_hyper({1.5, {0.5, 0.5, 1.5}, {x, y, z}}),
                   carlson::rd(x, y, z)));
    worst = std::max(
        worst,
        rel(oracle::r_hyper({1.5, {0.5, 0.5, 0.5, 1.0}, {x, y, z, p}}),
            carlson::rj(x, y, z, p)));
  }
  return make("hypergeometric_oracle", worst, 1e-8);
}

Check second_moment_oracle() {
  std::mt19937_64 rng(107);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const EigenTriple b = random_unit_det_b(rng, 0.1, 10.0);
    const EigenTriple a = moment::a_from_b(b);
    const SymTensor2 m = oracle::sphere_moment2(b);
    for (std::size_t i = 0; i < 3; ++i) {
      worst = std::max(worst, std::fabs(m(i, i) - a[i]) / a[i]);
      for (std::size_t j = i + 1; j < 3; ++j) {
        worst = std::max(worst, std::fabs(m(i, j)));
      }
    }
  }
  return make("second_moment_oracle", worst, 1e-7);
}

Check fourth_moment_oracle() {
  std::mt19937_64 rng(108);
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const EigenTriple b = random_unit_det_b(rng, 0.1, 10.0);
    const SymTensor4 A = moment::exact_closure(moment::a_from_b(b), b);
    const SymTensor4 S = oracle::sphere_moment4(b);
    const SymTensor4 T = oracle::aiv_t_integral(b);
    for (std::size_t s = 0; s < A.m.size(); ++s) {
      const double scale = std::max(std::fabs(A.m[s]), 0.01);
      worst = std::max(worst, std::fabs(A.m[s] - S.m[s]) / scale);
      worst = std::max(worst, std::fabs(A.m[s] - T.m[s]) / scale);
    }
  }
  return make("fourth_moment_oracle", worst, 1e-6);
}

void newton_checks(std::vector<Check>& out) {
  std::mt19937_64 rng(109);
  double worst = 0.0;
  int iters = 0;
  for (int k = 0; k < 10; ++k) {
    const EigenTriple a = random_simplex(rng);
    moment::NewtonReport rep;
    const EigenTriple b = moment::b_from_a(a, &rep);
    const EigenTriple back = moment::a_from_b(b);
    for (std::size_t i = 0; i < 3; ++i) {
      worst = std::max(worst, std::fabs(back[i] - a[i]) / a[i]);
    }
    iters = std::max(iters, rep.iterations);
  }
  out.push_back(make("newton_roundtrip", worst, 1e-9));
  out.push_back(make("newton_iterations", iters, 30.0));
}

Check contraction_identity() {
  std::mt19937_64 rng(110);
  std::vector<EigenTriple> states;
  for (int k = 0; k < 20; ++k) states.push_back(random_simplex(rng));
  states.push_back({0.3, 0.7, 0.0});
  states.push_back({0.0, 0.25, 0.75});
  states.push_back({0.6, 0.0, 0.4});
  double worst = 0.0;
  for (const EigenTriple& a : states) {
    const EigenTriple c =
        moment::closure_full(a, ClosureMethod::Exact).A.contract();
    for (std::size_t i = 0; i < 3; ++i) {
      worst = std::max(worst, std::fabs(c[i] - a[i]));
    }
  }
  return make("contraction_identity", worst, 1e-12);
}

Check planar_values() {
  const SymTensor4 P = moment::planar_closure({0.5, 0.5, 0.0});
  const SymTensor4 U =
      moment::closure_full({1.0, 0.0, 0.0}, ClosureMethod::Exact).A;
  double worst = std::fabs(P(0, 0, 0, 0) - 0.375);
  worst = std::max(worst, std::fabs(P.iijj(0, 1) - 0.125));
  worst = std::max(worst, std::fabs(U(0, 0, 0, 0) - 1.0));
  return make("planar_values", worst, 1e-15);
}

Check isotropic_closure() {
  const double third = 1.0 / 3.0;
  const SymTensor4 A =
      moment::closure_full({third, third, third}, ClosureMethod::Exact).A;
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    worst = std::max(worst, std::fabs(A(i, i, i, i) * 5.0 - 1.0));
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) worst = std::max(worst, std::fabs(A.iijj(i, j) * 15.0 - 1.0));
    }
  }
  return make("isotropic_closure", worst, 1e-12);
}

// Signed relative deviation of an asymptote from the exact axial value.
double axial_relerr(double (*asym)(double), double a) {
  const double h = 0.5 * (1.0 - a);
  const auto res =
      moment::closure_full(EigenTriple(h, h, a), ClosureMethod::Exact);
  return asym(a) / res.A(2, 2, 2, 2) - 1.0;
}

Check asym_small_a_ordering() {
  double worst = 0.0;
  for (double a : {1e-6, 1e-5, 1e-4, 1e-3}) {
    const double r1 = std::fabs(axial_relerr(moment::aiiii_asym1, a));
    const double r2 = std::fabs(axial_relerr(moment::aiiii_asym2, a));
    worst = std::max(worst, r1 / r2);
  }
  return make("asym_small_a_ordering", worst, 1.0);
}

Check asym_near_one_ordering() {
  double worst = 0.0;
  for (double u : {1e-4, 1e-3, 1e-2, 0.1}) {
    const double a = 1.0 - u;
    const double r4 = std::fabs(axial_relerr(moment::aiiii_asym4, a));
    const double r5 = std::fabs(axial_relerr(moment::aiiii_asym5, a));
    if (r4 == 0.0 && r5 == 0.0) continue;
    worst = std::max(worst, r5 / r4);
  }
  return make("asym_near_one_ordering", worst, 1.0);
}

}  // namespace

std::vector<Check> run_all() {
  std::vector<Check> out;
  out.push_back(rc_closed_forms());
  out.push_back(carlson_homogeneity());
  out.push_back(rd_sum_identity());
  out.push_back(rd_weighted_sum_rf());
  out.push_back(rf_degenerate_rc());
  out.push_back(rj_reduces_to_rd());
  out.push_back(rd_from_rf_derivative());
  out.push_back(limit_xrd_3());
  out.push_back(lemma_branch("lemma_acos_branch", 1e-3, 0.999));
  out.push_back(lemma_branch("lemma_acosh_branch", 1.001, 1e3));
  out.push_back(lambert_residual());
  out.push_back(lambert_branch_point());
  out.push_back(hypergeometric_oracle());
  out.push_back(second_moment_oracle());
  out.push_back(fourth_moment_oracle());
  newton_checks(out);
  out.push_back(contraction_identity());
  out.push_back(planar_values());
  out.push_back(isotropic_closure());
  out.push_back(asym_small_a_ordering());
  out.push_back(asym_near_one_ordering());
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string format_table(const std::vector<Check>& checks) {
  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.name.size());
  std::string out;
  char buf[128];
  for (const Check& c : checks) {
    std::snprintf(buf, sizeof buf, "%-*s  %10.3e  <= %8.1e  %s\n",
                  static_cast<int>(width), c.name.c_str(), c.value,
                  c.tolerance, c.pass ? "pass" : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace acgc::verify
