#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace panast {

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace panast
