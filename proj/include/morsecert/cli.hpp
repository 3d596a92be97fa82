#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morsecert {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetExceeded = 3;
}  // namespace exit_code

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics and usage to `err`. Returns the process exit code:
/// 0 success, 1 negative result, 2 input error, 3 budget exceeded.
int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace morsecert
