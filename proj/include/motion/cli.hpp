#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "motion/error.hpp"

namespace motion::cli {

// Published exit codes. No error path returns Success.
enum ExitCode : int {
  Success = 0,
  Usage = 2,
  LoadFailure = 3,   // lexicon / rulebase / corpus / class inventory could not be loaded
  UnknownLemma = 4,
  NotACoLVerb = 5,
  Infelicitous = 6,
  AmbiguousRuleBase = 7,
  CheckFailed = 8,   // corpus failures or lint findings
  Internal = 9,
};

int exit_code_for(ErrorKind kind) noexcept;

// Entry point shared by the `motionsem` binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motion::cli
