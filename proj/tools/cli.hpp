#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hartop::cli {

/// Exit status: 0 all checks passed, 1 a check failed, 2 usage or input error,
/// 3 output could not be written.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kIo = 3 };

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hartop::cli
