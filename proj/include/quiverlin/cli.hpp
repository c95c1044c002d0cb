#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quiverlin {

/// Exit codes of the command-line driver.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (program name excluded).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverlin
