#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wogsym::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

/// Runs one `wogsym` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wogsym::cli
