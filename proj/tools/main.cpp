#include <cstdio>
#include <string>
#include <vector>

#include "umbral/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  umbral::cli::RunResult result = umbral::cli::run(args);
  if (!result.output.empty()) std::fputs(result.output.c_str(), stdout);
  if (!result.diagnostics.empty()) std::fputs(result.diagnostics.c_str(), stderr);
  return result.exit_code;
}
