#ifndef UMBRAL_CLI_HPP
#define UMBRAL_CLI_HPP

#include <string>
#include <vector>

namespace umbral::cli {

// Exit codes: 0 success / all checks passed, 1 argument error,
// 2 verification failure.
struct RunResult {
  int exit_code = 0;
  std::string output;       // rendered document, bound for stdout
  std::string diagnostics;  // error text, bound for stderr
};

// Runs one subcommand (numbers | poly | eval | verify) with the given
// argument vector, argv[0] excluded. Never throws; failures land in the
// exit code and diagnostics.
RunResult run(const std::vector<std::string>& args);

}  // namespace umbral::cli

#endif
