#pragma once

// Command-line driver. Exit codes: 0 all verdicts PASS, 1 some FAIL,
// 2 usage or I/O error, 3 INAPPLICABLE only.

#include <iosfwd>
#include <string>
#include <vector>

namespace srball {

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srball
