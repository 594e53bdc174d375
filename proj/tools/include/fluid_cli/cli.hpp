#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fluid::cli {

// Exit codes: 0 success, 1 usage error, 2 data error.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDataError = 2;

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fluid::cli
