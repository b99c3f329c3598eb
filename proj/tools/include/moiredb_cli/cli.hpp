#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moiredb::cli {

enum ExitCode : int {
    kSuccess = 0,
    kRuntimeError = 1,
    kUsageError = 2,
};

/// Entry point shared by the binary and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moiredb::cli
