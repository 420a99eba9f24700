#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace staircase::cli {

inline constexpr int kExitParse = 64;
inline constexpr int kExitDomain = 65;

// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace staircase::cli
