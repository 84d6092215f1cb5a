#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace duality {

// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_negative = 1,     // refuted, not found, no split
    exit_input_error = 2,
    exit_inconclusive = 3, // nothing found within the bound of a truncated backend
};

// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace duality
