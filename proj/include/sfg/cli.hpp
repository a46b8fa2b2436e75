#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfg {

/// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,    // verify found a mismatch outside the known-issue allowlist
  kExitUsage = 2,       // bad flags, config or arguments
  kExitCapability = 3,  // a size, time or range limit was hit
  kExitIo = 4,          // unreadable or unwritable file, malformed input
};

/// Runs the command line `args` (without the program name). Results go to `out` unless
/// --out names a file; diagnostics go to `err`.
///
/// Option values are resolved per key: command-line flag, then the --config file
/// (key=value lines), then the environment variable SFG_<KEY> (upper case, '-' -> '_').
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfg
