#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weyl::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kRefused = 2,
  kInvariant = 3,
};

/// Runs one weylgb command. args excludes the program name, e.g.
/// {"div", "--n", "1", "--order", "lex", "x1*d1", "d1"}.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
