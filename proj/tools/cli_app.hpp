#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sternpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs the `stern` command line; args excludes the program name.
/// STERN_CAP and STERN_WORKERS are read from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sternpoly::cli
