#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strata::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count for table evaluation: STRATA_THREADS if set, else the hardware
// concurrency. Throws std::invalid_argument on a malformed value.
unsigned thread_count();

}  // namespace strata::cli
