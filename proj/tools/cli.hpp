#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msw::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,
    kInconclusive = 2,
    kBadInput = 3,
    kUsage = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace msw::cli
