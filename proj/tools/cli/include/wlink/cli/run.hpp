#pragma once
// Command dispatch for the wlink executable.

#include <iosfwd>
#include <string>
#include <vector>

namespace wlink::cli {

/// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 inadmissible.
enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kInadmissible = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlink::cli
