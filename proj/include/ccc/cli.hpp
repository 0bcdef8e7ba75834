#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccc::cli {

enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,
  kBadInput = 2,
  kOverBudget = 3,
};

/// Entry point shared by the `ccc` binary and the tests. `args` excludes the
/// program name: {"construct", "--p", "3", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccc::cli
