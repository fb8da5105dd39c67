#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilrank {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitAffirmative = 0,  // witness built/found, condition holds, verified
  kExitNegative = 1,     // violated, not found, mismatch, selftest failure
  kExitUsage = 2,        // bad flags or invalid input
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics and progress lines to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilrank
