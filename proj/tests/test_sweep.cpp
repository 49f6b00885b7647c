#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "acgc/sweep.hpp"
#include "doctest.h"

namespace sweep = acgc::sweep;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

double cell(const std::string& line, std::size_t col) {
  return std::stod(split_cells(line)[col]);
}

}  // namespace

TEST_CASE("default sweep specs pin range, count, and spacing") {
  const sweep::SweepSpec z = sweep::default_spec(sweep::Line::AToZero);
  CHECK(z.lo == 1e-6);
  CHECK(z.hi == 0.1);
  CHECK(z.points == 200);
  CHECK(z.spacing == sweep::Spacing::Log);

  const sweep::SweepSpec o = sweep::default_spec(sweep::Line::AToOne);
  CHECK(o.lo == 1e-4);
  CHECK(o.hi == 0.3);
  CHECK(o.spacing == sweep::Spacing::Log);

  const sweep::SweepSpec l = sweep::default_spec(sweep::Line::Lemma);
  CHECK(l.lo == 0.01);
  CHECK(l.hi == 0.99);
  CHECK(l.spacing == sweep::Spacing::Linear);

  const sweep::SweepSpec f = sweep::default_spec(sweep::Line::Arccos);
  CHECK(f.lo == 0.01);
  CHECK(f.hi == 1000.0);
  CHECK(f.spacing == sweep::Spacing::Log);
}

TEST_CASE("sweep headers are pinned byte for byte") {
  auto header = [](sweep::Line line) {
    sweep::SweepSpec spec = sweep::default_spec(line);
    spec.points = 2;  // keep rendering cheap; header does not depend on it
    return split_lines(sweep::render_csv(spec)).front();
  };
  CHECK(header(sweep::Line::AToZero) ==
        "a,b,Aiiii_exact,Aiiii_asym1,Aiiii_asym2,relerr_asym1,relerr_asym2");
  CHECK(header(sweep::Line::AToOne) ==
        "a,b,Aiiii_exact,Aiiii_asym4,Aiiii_asym5,relerr_asym4,relerr_asym5");
  CHECK(header(sweep::Line::Lemma) == "x,lhs,rhs,relerr");
  CHECK(header(sweep::Line::Arccos) == "x,arccos_sq,neg_ln_sq,relerr");
}

TEST_CASE("sweep tables have points rows and pinned endpoints") {
  sweep::SweepSpec spec = sweep::default_spec(sweep::Line::Lemma);
  spec.points = 17;
  const std::vector<std::string> lines = split_lines(sweep::render_csv(spec));
  REQUIRE(lines.size() == 18);  // header + 17 rows
  CHECK(cell(lines[1], 0) == 0.01);
  CHECK(cell(lines[17], 0) == 0.99);
}

TEST_CASE("sweep rendering is deterministic") {
  sweep::SweepSpec spec = sweep::default_spec(sweep::Line::AToZero);
  spec.points = 25;
  const std::string once = sweep::render_csv(spec);
  const std::string twice = sweep::render_csv(spec);
  CHECK(once == twice);
  CHECK(once.back() == '\n');
  CHECK(once.find("\r\n") == std::string::npos);
}

TEST_CASE("small-a sweep leaves its asymptote domain only at the top row") {
  // The first asymptote's domain ends at 2 e^-3 ~ 0.0996, so the default
  // grid hits nan exactly once: at the pinned endpoint a = 0.1.
  const sweep::SweepSpec spec = sweep::default_spec(sweep::Line::AToZero);
  const std::vector<std::string> lines = split_lines(sweep::render_csv(spec));
  REQUIRE(lines.size() == static_cast<std::size_t>(spec.points) + 1);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> cells = split_cells(lines[r]);
    REQUIRE(cells.size() == 7);
    const bool last = (r == lines.size() - 1);
    CHECK((cells[3] == "nan") == last);
    CHECK((cells[5] == "nan") == last);
    // Exact value and the second asymptote stay finite everywhere.
    CHECK(std::isfinite(cell(lines[r], 2)));
    CHECK(std::isfinite(cell(lines[r], 4)));
  }
}

TEST_CASE("lemma sweep relerr stays at rounding level") {
  sweep::SweepSpec spec = sweep::default_spec(sweep::Line::Lemma);
  spec.points = 40;
  const std::vector<std::string> lines = split_lines(sweep::render_csv(spec));
  for (std::size_t r = 1; r < lines.size(); ++r) {
    CHECK(std::abs(cell(lines[r], 3)) <= 1e-12);
    CHECK(cell(lines[r], 1) == doctest::Approx(cell(lines[r], 2)).epsilon(1e-12));
  }
}

TEST_CASE("near-isotropy sweep tabulates a = 1 - u, descending") {
  sweep::SweepSpec spec = sweep::default_spec(sweep::Line::AToOne);
  spec.points = 12;
  const std::vector<std::string> lines = split_lines(sweep::render_csv(spec));
  REQUIRE(lines.size() == 13);
  CHECK(cell(lines[1], 0) == doctest::Approx(1.0 - 1e-4).epsilon(1e-15));
  CHECK(cell(lines[12], 0) == doctest::Approx(0.7).epsilon(1e-15));
  for (std::size_t r = 2; r < lines.size(); ++r)
    CHECK(cell(lines[r], 0) < cell(lines[r - 1], 0));
  // Near isotropy both asymptotes are tight.
  CHECK(std::abs(cell(lines[1], 5)) < 1e-6);
  CHECK(std::abs(cell(lines[1], 6)) < 1e-6);
}

TEST_CASE("arccos sweep relerr is positive and bounded by one") {
  const sweep::SweepSpec spec = sweep::default_spec(sweep::Line::Arccos);
  const std::vector<std::string> lines = split_lines(sweep::render_csv(spec));
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const double rel = cell(lines[r], 3);
    CHECK(rel > 0.0);
    CHECK(rel <= 1.0);
  }
}

TEST_CASE("sweep specs are validated") {
  sweep::SweepSpec spec = sweep::default_spec(sweep::Line::Lemma);
  spec.lo = 0.5;
  spec.hi = 0.5;
  CHECK_THROWS_AS(sweep::render_csv(spec), std::invalid_argument);
  spec = sweep::default_spec(sweep::Line::Lemma);
  spec.points = 1;
  CHECK_THROWS_AS(sweep::render_csv(spec), std::invalid_argument);
  spec = sweep::default_spec(sweep::Line::AToZero);
  spec.lo = 0.0;  // log spacing needs a positive floor
  CHECK_THROWS_AS(sweep::render_csv(spec), std::invalid_argument);
}

TEST_CASE("line and spacing names round-trip") {
  using sweep::Line;
  using sweep::Spacing;
  for (Line line : {Line::AToZero, Line::AToOne, Line::Lemma, Line::Arccos})
    CHECK(sweep::line_from_string(sweep::to_string(line)) == line);
  CHECK(sweep::to_string(Line::AToZero) == "a_to_0");
  CHECK(sweep::to_string(Line::Arccos) == "arccos_fig2");
  for (Spacing s : {Spacing::Log, Spacing::Linear})
    CHECK(sweep::spacing_from_string(sweep::to_string(s)) == s);
  CHECK_THROWS_AS(sweep::line_from_string("figure3"), std::invalid_argument);
  CHECK_THROWS_AS(sweep::spacing_from_string("cubic"), std::invalid_argument);
}

TEST_CASE("write_csv emits exactly the rendered bytes") {
  sweep::SweepSpec spec = sweep::default_spec(sweep::Line::Arccos);
  spec.points = 9;
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "acgc_sweep_probe.csv";
  sweep::write_csv(spec, path.string());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == sweep::render_csv(spec));
  in.close();
  std::filesystem::remove(path);

  CHECK_THROWS_AS(sweep::write_csv(spec, "/nonexistent-dir/out.csv"),
                  std::runtime_error);
}

TEST_CASE("gnuplot recipes reference the data file") {
  const std::string recipe =
      sweep::gnuplot_recipe(sweep::Line::AToZero, "fig4.csv");
  CHECK(recipe.find("fig4.csv") != std::string::npos);
  CHECK(recipe.find("plot") != std::string::npos);
  CHECK(recipe.find("logscale") != std::string::npos);
  const std::string linrec = sweep::gnuplot_recipe(sweep::Line::Lemma, "l.csv");
  CHECK(linrec.find("l.csv") != std::string::npos);
}
