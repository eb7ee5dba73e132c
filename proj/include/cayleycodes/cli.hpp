#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayleycodes {

inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int { exit_ok = 0, exit_verification = 1, exit_usage = 2, exit_bound = 3 };

// Runs the command line `args` (program name excluded), writing the report
// to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayleycodes
