#pragma once

#include <iosfwd>

namespace renyi {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitConvergence = 4 };

/// Parses argv and runs one subcommand. Results go to `out`, diagnostics to
/// `err`; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace renyi
