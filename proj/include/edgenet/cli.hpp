#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgenet {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitNumeric = 3,
};

/// Runs one CLI invocation. args[0] is the program name. Data goes to `out`,
/// diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_dispatch(int argc, char** argv);

}  // namespace edgenet
