#pragma once

#include <string>

namespace acgc::sweep {

// Curve families the sweep command can tabulate. Names double as the CLI
// vocabulary (a_to_0, a_to_1, lemma, arccos_fig2).
enum class Line {
  AToZero,  // axial A_dddd and its small-a asymptotes against a
  AToOne,   // axial A_dddd and its near-isotropy asymptotes against 1-a
  Lemma,    // (x/3) R_D(1,1,x^2) against the closed form
  Arccos,   // Re[(arccos x)^2] against -ln^2(2x)
};

enum class Spacing { Log, Linear };

struct SweepSpec {
  Line line = Line::AToZero;
  double lo = 0.0;   // for AToOne the grid variable is u = 1 - a
  double hi = 0.0;
  int points = 200;
  Spacing spacing = Spacing::Log;
};

// Canonical range/spacing/point count for each line.
SweepSpec default_spec(Line line);

// Renders the whole table: one header row, comma separators, shortest
// round-trip decimal cells, LF endings. Asymptote cells evaluate to nan
// where the formula leaves its domain; other cells never do. Byte
// deterministic for a given spec.
std::string render_csv(const SweepSpec& spec);

// render_csv written to a file; throws std::runtime_error on I/O failure.
void write_csv(const SweepSpec& spec, const std::string& path);

// gnuplot commands that plot the CSV written for this line.
std::string gnuplot_recipe(Line line, const std::string& csv_path);

std::string to_string(Line line);
std::string to_string(Spacing spacing);
Line line_from_string(const std::string& name);          // throws invalid_argument
Spacing spacing_from_string(const std::string& name);    // throws invalid_argument

}  // namespace acgc::sweep
