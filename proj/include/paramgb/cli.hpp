#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paramgb {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitGuardFailure = 1, kExitInputError = 2 };

/// Runs one CLI invocation. `args` excludes the program name. The structured
/// result goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paramgb
