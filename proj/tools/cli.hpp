#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fjoin::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kUsageError = 2,
    kOverflow = 3,
    kMismatch = 4,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fjoin::cli
