#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tla::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,          ///< accept / valid / equivalent
    kRejected = 1,    ///< reject / invalid
    kInequivalent = 2,
    kUsage = 64,
    kFile = 66,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tla::cli
