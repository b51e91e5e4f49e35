#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ifk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDefects = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `ifk` command. `args` excludes the program name. The report goes
/// to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifk::cli
