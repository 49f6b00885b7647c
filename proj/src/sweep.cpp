#include "acgc/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "acgc/axial.hpp"
#include "acgc/carlson.hpp"
#include "acgc/moment.hpp"
#include "acgc/tensor.hpp"

namespace acgc::sweep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_spec(const SweepSpec& s) {
  if (!(s.lo < s.hi)) throw std::invalid_argument("sweep: requires lo < hi");
  if (s.points < 2) throw std::invalid_argument("sweep: requires points >= 2");
  if (s.spacing == Spacing::Log && !(s.lo > 0.0)) {
    throw std::invalid_argument("sweep: log spacing requires lo > 0");
  }
}

// Endpoints are pinned to lo/hi exactly so reruns are byte-identical and
// the advertised range is honored to the last bit.
std::vector<double> grid(const SweepSpec& s) {
  std::vector<double> xs(static_cast<std::size_t>(s.points));
  const int n = s.points;
  if (s.spacing == Spacing::Log) {
    const double step = std::log(s.hi / s.lo) / (n - 1);
    for (int k = 0; k < n; ++k) xs[k] = s.lo * std::exp(k * step);
  } else {
    const double step = (s.hi - s.lo) / (n - 1);
    for (int k = 0; k < n; ++k) xs[k] = s.lo + k * step;
  }
  xs.front() = s.lo;
  xs.back() = s.hi;
  return xs;
}

// Shortest decimal that round-trips; locale-free, so deterministic.  NaN
// sign bits from propagation are platform noise, so pin the spelling.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void append_row(std::string& out, const std::vector<double>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += fmt(cells[i]);
  }
  out += '\n';
}

double guarded(double (*f)(double), double a) {
  try {
    return f(a);
  } catch (const std::domain_error&) {
    return kNaN;
  }
}

// Axial state with the distinct axis last; returns (b_d, A_dddd).
struct AxialPoint {
  double b;
  double exact;
};

AxialPoint axial_point(double a) {
  const double h = 0.5 * (1.0 - a);
  const auto res =
      moment::closure_full(EigenTriple(h, h, a), ClosureMethod::Exact);
  return {res.b[2], res.A(2, 2, 2, 2)};
}

}  // namespace

SweepSpec default_spec(Line line) {
  switch (line) {
    case Line::AToZero:
      return {Line::AToZero, 1e-6, 0.1, 200, Spacing::Log};
    case Line::AToOne:
      return {Line::AToOne, 1e-4, 0.3, 200, Spacing::Log};
    case Line::Lemma:
      return {Line::Lemma, 0.01, 0.99, 200, Spacing::Linear};
    case Line::Arccos:
      return {Line::Arccos, 0.01, 1000.0, 200, Spacing::Log};
  }
  throw std::invalid_argument("sweep: unknown line");
}

std::string render_csv(const SweepSpec& spec) {
  check_spec(spec);
  const std::vector<double> xs = grid(spec);
  std::string out;
  out.reserve(xs.size() * 96);

  switch (spec.line) {
    case Line::AToZero: {
      out += "a,b,Aiiii_exact,Aiiii_asym1,Aiiii_asym2,";
      out += "relerr_asym1,relerr_asym2\n";
      for (double a : xs) {
        const AxialPoint p = axial_point(a);
        const double s1 = guarded(moment::aiiii_asym1, a);
        const double s2 = guarded(moment::aiiii_asym2, a);
        append_row(out, {a, p.b, p.exact, s1, s2, s1 / p.exact - 1.0,
                         s2 / p.exact - 1.0});
      }
      break;
    }
    case Line::AToOne: {
      // Grid runs over u = 1 - a; the first column still reports a.
      out += "a,b,Aiiii_exact,Aiiii_asym4,Aiiii_asym5,";
      out += "relerr_asym4,relerr_asym5\n";
      for (double u : xs) {
        const double a = 1.0 - u;
        const AxialPoint p = axial_point(a);
        const double s4 = guarded(moment::aiiii_asym4, a);
        const double s5 = guarded(moment::aiiii_asym5, a);
        append_row(out, {a, p.b, p.exact, s4, s5, s4 / p.exact - 1.0,
                         s5 / p.exact - 1.0});
      }
      break;
    }
    case Line::Lemma: {
      out += "x,lhs,rhs,relerr\n";
      for (double x : xs) {
        const double lhs = x * carlson::rd(1.0, 1.0, x * x) / 3.0;
        const double rhs = axial::f_axial(x);
        append_row(out, {x, lhs, rhs, lhs / rhs - 1.0});
      }
      break;
    }
    case Line::Arccos: {
      out += "x,arccos_sq,neg_ln_sq,relerr\n";
      for (double x : xs) {
        // Re[(arccos x)^2]: real branch below 1, -acosh^2 above.
        const double ac = x <= 1.0 ? std::acos(x) : 0.0;
        const double acsq =
            x <= 1.0 ? ac * ac : -std::acosh(x) * std::acosh(x);
        const double l = std::log(2.0 * x);
        const double nls = -l * l;
        const double rel =
            (acsq - nls) / (std::fabs(acsq) + std::fabs(nls));
        append_row(out, {x, acsq, nls, rel});
      }
      break;
    }
  }
  return out;
}

void write_csv(const SweepSpec& spec, const std::string& path) {
  const std::string csv = render_csv(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("sweep: cannot open " + path);
  out << csv;
  out.flush();
  if (!out) throw std::runtime_error("sweep: write failed for " + path);
}

std::string gnuplot_recipe(Line line, const std::string& csv_path) {
  const std::string q = "'" + csv_path + "'";
  std::string r = "set datafile separator ','\n";
  switch (line) {
    case Line::AToZero:
      r += "set logscale xy\n";
      r += "set xlabel 'a'\n";
      r += "set ylabel '|relative error|'\n";
      r += "plot " + q + " using 1:(abs($6)) with lines title 'asym1', \\\n";
      r += "     " + q + " using 1:(abs($7)) with lines title 'asym2'\n";
      break;
    case Line::AToOne:
      r += "set logscale xy\n";
      r += "set xlabel '1-a'\n";
      r += "set ylabel '|relative error|'\n";
      r += "plot " + q +
           " using (1-$1):(abs($6)) with lines title 'asym4', \\\n";
      r += "     " + q +
           " using (1-$1):(abs($7)) with lines title 'asym5'\n";
      break;
    case Line::Lemma:
      r += "set xlabel 'x'\n";
      r += "plot " + q + " using 1:2 with lines title 'x R_D(1,1,x^2)/3', \\\n";
      r += "     " + q +
           " using 1:3 every 10 with points title 'closed form'\n";
      break;
    case Line::Arccos:
      r += "set logscale xy\n";
      r += "set xlabel 'x'\n";
      r += "set ylabel 'relative error'\n";
      r += "plot " + q + " using 1:4 with lines title 'arccos^2 vs -ln^2(2x)'\n";
      break;
  }
  return r;
}

std::string to_string(Line line) {
  switch (line) {
    case Line::AToZero: return "a_to_0";
    case Line::AToOne: return "a_to_1";
    case Line::Lemma: return "lemma";
    case Line::Arccos: return "arccos_fig2";
  }
  return "?";
}

std::string to_string(Spacing spacing) {
  return spacing == Spacing::Log ? "log" : "linear";
}

Line line_from_string(const std::string& name) {
  if (name == "a_to_0") return Line::AToZero;
  if (name == "a_to_1") return Line::AToOne;
  if (name == "lemma") return Line::Lemma;
  if (name == "arccos_fig2") return Line::Arccos;
  throw std::invalid_argument("unknown sweep line: " + name);
}

Spacing spacing_from_string(const std::string& name) {
  if (name == "log") return Spacing::Log;
  if (name == "linear") return Spacing::Linear;
  throw std::invalid_argument("unknown spacing: " + name);
}

}  // namespace acgc::sweep
