#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blanc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDomainError = 2,
  kInternalInconsistency = 3,
};

/// Entry point of the `blanc` tool: eval, certify, render, approx, scan,
/// selftest.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in consistency battery; prints one line per check.
int selftest(std::ostream& out);

}  // namespace blanc::cli
