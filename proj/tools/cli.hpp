#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoassoc::cli {

/// Runs one command line (without the program name). Exit status: 0 on
/// success, 1 when a verification or audit fails, 2 on invalid input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoassoc::cli
