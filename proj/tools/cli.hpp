#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbcode::cli {

struct CommandOutcome {
  int exit_code = 0;        // 0 success, 1 domain error, 2 usage error
  std::string payload;      // JSON document, only on success
  std::string diagnostics;  // human-readable, for standard error
};

/// Runs one command line (without the program name). `input` serves "-" file arguments.
CommandOutcome run(const std::vector<std::string>& args, std::istream& input);

}  // namespace hilbcode::cli
