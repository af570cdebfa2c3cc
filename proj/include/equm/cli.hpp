#pragma once

#include <ostream>

namespace equm {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitLoadError = 2,
  kExitUnknownId = 3,
  kExitUsage = 4,
};

/// Runs one invocation (argv[0] is the program name) and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equm
