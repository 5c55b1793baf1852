#pragma once

#include <iosfwd>

namespace symell::cli {

/// Exit codes.
enum Exit : int {
  kOk = 0,
  kViolations = 1,
  kDomain = 2,
  kTolerance = 3,
  kRegime = 4,
  kUsage = 64,
};

/// Runs one command line. Data goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace symell::cli
