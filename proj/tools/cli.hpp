#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcrpc::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kMismatch = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcrpc::cli
