#pragma once

#include <ostream>

namespace scrimkit {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitPrecondition = 3,
  kExitVerification = 4,
  kExitOutput = 5,
};

/// Runs `scrimkit <factor|codes|census> ...`; results go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scrimkit
