#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tomex::cli {

/// Exit statuses: 0 affirmative or success, 1 negative verdict, 2 error.
enum ExitCode : int { kAffirmative = 0, kNegative = 1, kError = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tomex::cli
