#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace defbin {

// Entry point shared by the binary and the tests. args excludes the program
// name. Reports go to --output when given, else to out. Returns the process
// exit code: 0 success, 1 invalid input, 2 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace defbin
