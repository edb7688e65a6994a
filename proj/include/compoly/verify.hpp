#pragma once

#include "compoly/composition.hpp"

#include <string>
#include <vector>

namespace compoly {

/// Aggregate result of one named identity check swept over every
/// composition of a given n.
struct CheckOutcome {
  std::string check;
  int checked = 0;
  bool skipped = false;
  std::string skip_reason;
  std::vector<std::string> failures;

  bool passed() const { return !skipped && failures.empty(); }
};

/// Canonical check order as run by run_checks.
const std::vector<std::string>& check_names();

/// Runs the named checks (all of them when only is empty) over every
/// composition of n. Checks whose size guard is below n are reported
/// as skipped. Unknown names throw std::invalid_argument.
std::vector<CheckOutcome> run_checks(int n, const std::vector<std::string>& only = {});

} // namespace compoly
