#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prefrep::cli {

enum ExitCode { kOk = 0, kInputError = 2, kLimit = 3 };

/// Runs one invocation. `args` excludes the program name. "-" as the instance
/// path reads from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace prefrep::cli
