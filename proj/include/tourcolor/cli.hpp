#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tourcolor {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_infeasible = 3,
};

/// Runs one command. `args` excludes the program name. JSON results go to
/// `out`, human-readable notes to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tourcolor
