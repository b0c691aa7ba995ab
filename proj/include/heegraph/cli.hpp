#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heegraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `heegraph` invocation.  `args` excludes the program name.
/// Returns 0 on success, 1 when a checked statement fails and 2 on usage or
/// input errors; diagnostics go to `err` as a single line (usage errors add
/// the help text).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heegraph
