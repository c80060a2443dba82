#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leetforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRuntime = 3;

/// Runs one subcommand. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leetforge::cli
