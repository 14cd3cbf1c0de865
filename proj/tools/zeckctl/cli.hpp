#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Parses and runs one zeckctl invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeck::cli
