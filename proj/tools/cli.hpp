#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace doxa::cli {

// Exit codes.
inline constexpr int kOk = 0;        // property holds / computation succeeded
inline constexpr int kFails = 1;     // property fails, witness emitted
inline constexpr int kUsage = 2;     // usage or input error

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doxa::cli
