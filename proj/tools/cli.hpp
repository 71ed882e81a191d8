#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace amazing::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success / all checks pass, 1 a verification failed,
/// 2 usage error.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name. The document goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amazing::cli
