#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace whirl::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

struct CommandOutcome {
  int exit_code = kOk;
  std::vector<std::string> artifacts;  // files written
  nlohmann::ordered_json report;       // what was printed to `out`
};

// Runs one command line (argv without the program name). The JSON report or
// generated artifact goes to `out` (and to --out FILE if given); diagnostics
// go to `err`.
CommandOutcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whirl::cli
