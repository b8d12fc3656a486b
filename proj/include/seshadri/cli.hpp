#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seshadri::cli {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kVerified = 0,
  kRefuted = 1,
  kInvalidInput = 2,
  kGuardrail = 3,
};

// Runs one command; `args` excludes the program name. Machine output goes to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seshadri::cli
