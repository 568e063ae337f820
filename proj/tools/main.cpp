#include <cstdio>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = curvlab::cli::run(args);
  if (!result.output.empty()) {
    std::fputs(result.output.c_str(), result.exit_code == 1 ? stderr : stdout);
  }
  return result.exit_code;
}
