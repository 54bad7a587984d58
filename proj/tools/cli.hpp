#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tw::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Reports go to `out` as JSON; diagnostics go to `err`.
[[nodiscard]] auto run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

}  // namespace tw::cli
