#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hookbound {

/// Exit codes shared by every subcommand.
namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFail = 2;
inline constexpr int kHypothesis = 3;
inline constexpr int kInternal = 4;
}  // namespace exit_code

/// Runs the command line `args` (args[0] is the program name); results go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hookbound
