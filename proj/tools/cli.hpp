#pragma once

#include <string>
#include <vector>

namespace fracosc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNumericInvalid = 3,
  kPartialFailure = 4,
};

/// Entry point of the `fracosc` tool.
int run(int argc, char** argv);

/// Same, with the arguments (excluding the program name) as strings.
int run(const std::vector<std::string>& args);

}  // namespace fracosc::cli
