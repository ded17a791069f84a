#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tapsp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerifyMismatch = 2,
  kInputError = 3,
  kNegativeCycle = 4,
};

/// Runs one `tapsp` command line (without the program name). Options can also come
/// from TAPSP_<OPTION> environment variables, e.g. TAPSP_SEED, TAPSP_OMEGA.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tapsp::cli
