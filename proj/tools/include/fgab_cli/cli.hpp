#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fgab::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kInputError = 1;
inline constexpr int kPreconditionFailure = 2;
inline constexpr int kInternalError = 3;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgab::cli
