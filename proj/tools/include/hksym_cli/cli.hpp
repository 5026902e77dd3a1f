#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hksym::cli {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_malformed = 2 };

/// Runs one command; args excludes the program name. "-" as a file name
/// reads from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hksym::cli
