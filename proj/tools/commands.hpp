#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circulant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name) and returns the
/// process exit status.  Normal output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circulant::cli
