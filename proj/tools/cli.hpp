#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ferrers::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInvalidInput = 3 };

// Runs one command line (without the program name). Structured objects are
// read from `in`; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ferrers::cli
