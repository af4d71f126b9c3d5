// Command-line front end: verify, charges, stark-map, simulate.
//
// Exit codes: 0 success, 1 numerical or check failure, 2 usage or config error.
#pragma once

#include <ostream>

namespace hmono::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hmono::cli
