#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace excedance {

/// Exit codes of the command-line tool; no other values are ever returned.
enum ExitCode : int { kExitOk = 0, kExitStrictFailure = 1, kExitUsage = 2 };

/// Runs one invocation. `args` excludes the program name. Output is written
/// to `out` only once the whole command has succeeded; diagnostics go to
/// `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace excedance
