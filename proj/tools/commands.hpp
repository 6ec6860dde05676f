#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipyr::cli {

// Runs one CLI invocation. args excludes the program name.
// Returns the process exit code: 0 success, 1 internal invariant violation,
// 2 user input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipyr::cli
