#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

// Runs one command line (without the program name). Results go to `out`
// unless the command writes to --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sens::cli
