#pragma once

#include <iosfwd>

namespace nilstab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1, ///< verification failed, scan unstable, cross-check mismatch
  kExitUsage = 2,   ///< bad arguments, parse errors, out-of-bounds r or c
};

/// Runs the tool with the given arguments; argv[0] is the program name.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nilstab
