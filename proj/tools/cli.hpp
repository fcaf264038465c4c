#pragma once

#include <ostream>
#include <stop_token>
#include <string>
#include <vector>

namespace ellsurf::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kPrecondition = 2,
  kBudgetExhausted = 3,
  kParse = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. `stop` cancels a running scan.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::stop_token stop = {});

}  // namespace ellsurf::cli
