#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fanocone::cli {

/// Exit codes: 0 affirmative result, 1 negative or unknown result, 2 usage error.
enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2 };

/// Runs one command line (without the program name). `threads_env` is the raw
/// value of FANOCONE_THREADS, or empty when unset.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& threads_env = {});

}  // namespace fanocone::cli
