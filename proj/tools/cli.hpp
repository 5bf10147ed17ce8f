#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). Returns the exit
/// status: 0 on success or pass, 1 on a verification failure, 2 on an
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nm::cli
