#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ghostmgf::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFailed = 1,   // a verification came out false, or a sweep recorded failures
  kUsage = 2,           // malformed flags or option values
  kInvalidSpec = 3,     // k, m, n rejected
  kUnknownCommand = 4,
  kUnwritablePath = 5,
  kComputationFailed = 6,  // precision or root-finding limits reached
};

/// Environment variable consulted for the default working precision.
inline constexpr const char* kPrecisionEnv = "GHOSTMGF_PRECISION";

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --output file); structured error records go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghostmgf::cli
