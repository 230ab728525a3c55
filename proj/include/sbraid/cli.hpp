#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbraid::cli {

enum ExitCode : int {
  kOk        = 0,  // success, or a true verdict
  kFalse     = 1,  // false verdict (trivial, equal, verify)
  kUsage     = 2,  // bad arguments or malformed words
  kInternal  = 3   // internal invariant failure
};

//! Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sbraid::cli
