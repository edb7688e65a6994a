#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace compoly {

/// Runs the command-line interface on the given arguments (program name
/// excluded). Results go to out, diagnostics to err. Returns 0 on
/// success, 1 when a verified identity fails or an internal cross-check
/// trips, and 2 on usage errors, unparseable input, or guard violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace compoly
