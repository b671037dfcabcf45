#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oblivis::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 on success, 1 when a run or check fails, 2 on
/// parse or validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oblivis::tools
