#ifndef CURVLAB_CLI_HPP
#define CURVLAB_CLI_HPP

#include <string>
#include <vector>

namespace curvlab::cli {

/// Exit codes: 0 success, 1 validation/usage error, 2 falsification found
/// (or a reproduction case that does not match its expected value).
struct CliResult {
  int exit_code = 0;
  std::string output;  // JSON report or help/error text, newline terminated
};

CliResult run(const std::vector<std::string>& args);

}  // namespace curvlab::cli

#endif
