#pragma once

#include <string>
#include <vector>

namespace acgc::verify {

// One cross-module consistency check. pass is value <= tolerance with
// value finite; value is the worst error measure seen by the check.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Runs the whole identity suite: closed forms, symmetry and reduction
// identities, derivative and limit relations, the hypergeometric and
// quadrature oracles, inversion roundtrips, and asymptote orderings.
// Seeds are fixed internally, so repeated runs agree; wall time is a
// few seconds.
std::vector<Check> run_all();

bool all_pass(const std::vector<Check>& checks);

// One aligned row per check: name, max error, tolerance, verdict.
std::string format_table(const std::vector<Check>& checks);

}  // namespace acgc::verify
