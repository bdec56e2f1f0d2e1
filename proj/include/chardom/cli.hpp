#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chardom {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 property violation under --expect-pass, 2 bad
/// input or usage.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chardom
