#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acgc/axial.hpp"
#include "acgc/carlson.hpp"
#include "acgc/lambert.hpp"
#include "acgc/moment.hpp"
#include "acgc/sweep.hpp"
#include "acgc/tensor.hpp"
#include "acgc/verify.hpp"

namespace {

// Exit codes: 0 success, 1 domain/convergence/check failure, 2 usage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double eval_function(const std::string& fn, const std::vector<double>& a) {
  auto need = [&](std::size_t n) {
    if (a.size() != n) {
      throw UsageError("eval " + fn + " expects " + std::to_string(n) +
                       " argument(s), got " + std::to_string(a.size()));
    }
  };
  if (fn == "rc") { need(2); return acgc::carlson::rc(a[0], a[1]); }
  if (fn == "rf") { need(3); return acgc::carlson::rf(a[0], a[1], a[2]); }
  if (fn == "rd") { need(3); return acgc::carlson::rd(a[0], a[1], a[2]); }
  if (fn == "rj") { need(4); return acgc::carlson::rj(a[0], a[1], a[2], a[3]); }
  if (fn == "w_m1") { need(1); return acgc::lambert::w_m1(a[0]); }
  if (fn == "f_axial") { need(1); return acgc::axial::f_axial(a[0]); }
  throw UsageError("unknown function: " + fn);
}

// Renormalizes off-simplex input (with a warning) before dispatch;
// deviations within 1e-8 are left for the library to absorb.
acgc::EigenTriple simplex_input(const std::vector<double>& v) {
  acgc::EigenTriple a(v[0], v[1], v[2]);
  const double s = a.sum();
  if (std::isfinite(s) && s > 0.0 && std::fabs(s - 1.0) > 1e-8) {
    std::cerr << "warning: input sums to " << s << "; renormalizing\n";
    return {a[0] / s, a[1] / s, a[2] / s};
  }
  return a;
}

void print_closure(const acgc::moment::ClosureResult& res, bool csv) {
  if (csv) {
    std::cout << "quantity,c1,c2,c3\n";
    for (std::size_t i = 0; i < 3; ++i) {
      std::cout << "A_" << i + 1 << i + 1 << "jj," << fmt(res.A.iijj(i, 0))
                << ',' << fmt(res.A.iijj(i, 1)) << ',' << fmt(res.A.iijj(i, 2))
                << '\n';
    }
    std::cout << "b," << fmt(res.b[0]) << ',' << fmt(res.b[1]) << ','
              << fmt(res.b[2]) << '\n';
    return;
  }
  char buf[160];
  std::printf("method: %s\n", acgc::to_string(res.route).c_str());
  std::printf("%-8s %23s %23s %23s\n", "A_iijj", "j=1", "j=2", "j=3");
  for (std::size_t i = 0; i < 3; ++i) {
    std::snprintf(buf, sizeof buf, "i=%zu", i + 1);
    std::printf("%-8s %23.17g %23.17g %23.17g\n", buf, res.A.iijj(i, 0),
                res.A.iijj(i, 1), res.A.iijj(i, 2));
  }
  std::printf("%-8s %23.17g %23.17g %23.17g\n", "b", res.b[0], res.b[1],
              res.b[2]);
}

void print_invert(const acgc::moment::ClosureResult& res, bool csv) {
  if (csv) {
    std::cout << "b1,b2,b3\n"
              << fmt(res.b[0]) << ',' << fmt(res.b[1]) << ',' << fmt(res.b[2])
              << '\n';
    return;
  }
  std::printf("method: %s\n", acgc::to_string(res.route).c_str());
  std::printf("b = (%.17g, %.17g, %.17g)\n", res.b[0], res.b[1], res.b[2]);
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == s.size()) {
    throw UsageError("--range expects lo:hi");
  }
  auto parse = [&](const std::string& part) {
    double v = 0.0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
      throw UsageError("--range: cannot parse '" + part + "'");
    }
    return v;
  };
  return {parse(s.substr(0, pos)), parse(s.substr(pos + 1))};
}

int run_verify(bool csv) {
  const auto checks = acgc::verify::run_all();
  if (csv) {
    std::cout << "name,max_error,tolerance,status\n";
    for (const auto& c : checks) {
      std::cout << c.name << ',' << fmt(c.value) << ',' << fmt(c.tolerance)
                << ',' << (c.pass ? "pass" : "fail") << '\n';
    }
  } else {
    std::cout << acgc::verify::format_table(checks);
    std::cout << (acgc::verify::all_pass(checks) ? "overall: pass\n"
                                                 : "overall: FAIL\n");
  }
  return acgc::verify::all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Carlson symmetric integrals, the R_D(1,1,x^2) relation with its "
      "Lambert-W inverses, and exact fourth-moment closures of angular "
      "central Gaussian states"};
  app.require_subcommand(1);

  const std::vector<std::string> kMethods = {
      "exact", "planar", "unidirectional", "asym1", "asym2", "asym4", "asym5"};
  const std::vector<std::string> kLines = {"a_to_0", "a_to_1", "lemma",
                                           "arccos_fig2"};

  auto* eval = app.add_subcommand("eval", "Evaluate one function at a point");
  std::string fn;
  std::vector<double> fargs;
  eval->add_option("function", fn, "rc | rf | rd | rj | w_m1 | f_axial")
      ->required()
      ->check(CLI::IsMember({"rc", "rf", "rd", "rj", "w_m1", "f_axial"}));
  eval->add_option("args", fargs, "numeric arguments");

  auto* closure =
      app.add_subcommand("closure", "Fourth moments from second moments");
  std::vector<double> cvals;
  std::string cmethod = "exact", cformat = "table";
  closure->add_option("a", cvals, "second-moment eigenvalues a1 a2 a3")
      ->required()
      ->expected(3);
  closure->add_option("--method", cmethod, "closure route")
      ->check(CLI::IsMember(kMethods));
  closure->add_option("--format", cformat, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));

  auto* invert = app.add_subcommand(
      "invert", "Concentration eigenvalues b from second moments a");
  std::vector<double> ivals;
  std::string imethod = "exact", iformat = "table";
  invert->add_option("a", ivals, "second-moment eigenvalues a1 a2 a3")
      ->required()
      ->expected(3);
  invert->add_option("--method", imethod, "closure route")
      ->check(CLI::IsMember(kMethods));
  invert->add_option("--format", iformat, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));

  auto* sweep = app.add_subcommand("sweep", "Tabulate a curve family as CSV");
  std::string sline = "a_to_0", srange, sspacing, sout;
  int spoints = 0;
  sweep->add_option("--line", sline, "curve family")
      ->check(CLI::IsMember(kLines));
  sweep->add_option("--points", spoints, "number of rows")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--range", srange, "grid range lo:hi");
  sweep->add_option("--spacing", sspacing, "log | linear")
      ->check(CLI::IsMember({"log", "linear"}));
  sweep->add_option("--out", sout, "output file (stdout if omitted)");

  auto* recipe =
      app.add_subcommand("recipe", "Print a gnuplot recipe for a sweep CSV");
  std::string rline = "a_to_0", rout;
  recipe->add_option("--line", rline, "curve family")
      ->check(CLI::IsMember(kLines));
  recipe->add_option("--out", rout, "CSV path the recipe should plot");

  auto* verify =
      app.add_subcommand("verify", "Run the cross-module identity suite");
  std::string vformat = "table";
  verify->add_option("--format", vformat, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      const double v = eval_function(fn, fargs);
      std::cout << std::setprecision(17) << std::showpoint << v << '\n';
      return 0;
    }
    if (closure->parsed()) {
      const auto res = acgc::moment::closure_full(
          simplex_input(cvals), acgc::closure_method_from_string(cmethod));
      print_closure(res, cformat == "csv");
      return 0;
    }
    if (invert->parsed()) {
      const auto res = acgc::moment::closure_full(
          simplex_input(ivals), acgc::closure_method_from_string(imethod));
      print_invert(res, iformat == "csv");
      return 0;
    }
    if (sweep->parsed()) {
      auto spec = acgc::sweep::default_spec(acgc::sweep::line_from_string(sline));
      if (sweep->count("--points")) spec.points = spoints;
      if (sweep->count("--range")) {
        const auto [lo, hi] = parse_range(srange);
        spec.lo = lo;
        spec.hi = hi;
      }
      if (sweep->count("--spacing")) {
        spec.spacing = acgc::sweep::spacing_from_string(sspacing);
      }
      if (sout.empty()) {
        std::cout << acgc::sweep::render_csv(spec);
      } else {
        acgc::sweep::write_csv(spec, sout);
      }
      return 0;
    }
    if (recipe->parsed()) {
      const auto line = acgc::sweep::line_from_string(rline);
      const std::string path =
          rout.empty() ? acgc::sweep::to_string(line) + ".csv" : rout;
      std::cout << acgc::sweep::gnuplot_recipe(line, path);
      return 0;
    }
    if (verify->parsed()) return run_verify(vformat == "csv");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
