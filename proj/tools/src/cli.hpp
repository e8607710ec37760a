#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biclique::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one subcommand. `args` excludes the program name. JSON (or CSV for
/// atlas) goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biclique::cli
