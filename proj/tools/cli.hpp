#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lcalg::cli {

/// Exit codes: 0 every check passed, 1 some check failed, 2 bad spec, bad
/// parameters or bad usage, 3 a needed bracket or symbol lies beyond the
/// truncation.
enum ExitCode { Ok = 0, CheckFailed = 1, BadInput = 2, Truncation = 3 };

inline constexpr int kSchemaVersion = 1;

/// Runs one command. `args` excludes the program name. Human-readable output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcalg::cli
