#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superinv::cli {

enum ExitCode : int { kOk = 0, kFalsified = 1, kInputError = 2, kResourceCap = 3 };

// Parses and executes one command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, with the arguments following the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superinv::cli
