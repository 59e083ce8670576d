#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipfire::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kPreconditionError = 3,
};

/// Runs the command line `args` (without the program name), writing records
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli
