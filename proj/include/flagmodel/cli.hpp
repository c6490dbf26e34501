#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagmodel::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,      // a verification or sweep assertion did not hold
  kInvalidInput = 2,     // validation failure
  kNumericalFailure = 3  // spectrum mismatch, degenerate gap, non-finite step
};

/// Runs the tool on args (without the program name), writing reports to out
/// and one-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagmodel::cli
