#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace regionkit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitInputError = 2,
  kExitCapacityError = 3,
  kExitInternalError = 4,
};

/// Runs one command line (without the program name). "-" names stdin for
/// inputs and stdout for outputs.
int cli_dispatch(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace regionkit
