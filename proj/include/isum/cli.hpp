#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isum::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;    // bad flags, unknown name, malformed grid
inline constexpr int kRefused = 2;  // uncertified, diverged, or bound above tol

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// "a:b:s" -> a, a+s, ..., up to b. Throws std::invalid_argument when malformed.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace isum::cli
