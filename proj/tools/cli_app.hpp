#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psp::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kUnreachable = 3,
  kQueryDomain = 4,
  kVerificationFailed = 5,
  kOracleScale = 6,
};

/// Runs the `psp` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psp::cli
