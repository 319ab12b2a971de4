#pragma once

#include <iosfwd>

namespace pdbell::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_resource = 3,
  exit_inconclusive = 4,
};

/// Entry point shared by the executable and the tests. Report output goes to
/// `out` (or the --out file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdbell::cli
