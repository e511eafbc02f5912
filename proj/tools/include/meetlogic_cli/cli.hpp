#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace meet::cli {

enum Exit : int { kAffirm = 0, kNegative = 1, kInconclusive = 2, kUsage = 3 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meet::cli
