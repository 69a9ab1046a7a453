#pragma once

// Command-line front end: evaluate functions and operators, solve
// initial value problems to tabulated output, run verification suites.

#include <iosfwd>
#include <string>
#include <vector>

namespace qfrac::cli {

// Parse and run one invocation; args excludes the program name.
// Results go to out, diagnostics to err. Exit codes: 0 success,
// 1 validation error, 2 convergence or divergence failure,
// 3 suite failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qfrac::cli
