#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latgenus {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    /// A disagreement, a rejected certificate, or a definite negative answer.
    kExitDisagree = 1,
    kExitInputError = 2,
    kExitInconclusive = 3,
};

/// Runs the command line `args` (without the program name). All output goes
/// to `out` / `err`; never calls exit().
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latgenus
