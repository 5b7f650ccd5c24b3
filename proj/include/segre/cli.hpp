#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segre {

/// Command-line entry point, shared by the binary and the tests: args is
/// argv without the program name. Machine-readable JSON goes to out, human
/// progress and diagnostics to err. Returns the process exit code:
/// 0 verified, 1 mathematical violation, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segre
