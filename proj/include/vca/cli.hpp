#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches one subcommand (`order`, `covers`, `generators`, `decompose`,
/// `verify`). `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vca::cli
