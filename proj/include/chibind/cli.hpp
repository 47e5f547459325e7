#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chibind::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_indeterminate = 3 };

/// Runs one command line (without the program name). Reports and generated graphs go
/// to `out`, diagnostics to `err`. The oracle budget defaults to $CHIBIND_BUDGET.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chibind::cli
