#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbsel {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI command. `args` excludes the program name. Reports and
/// generated files go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fbsel
