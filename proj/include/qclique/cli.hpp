#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qclique::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kInputError = 2,
    kEngineMismatch = 3,
};

/// Entry point for the `clique` tool. `args` excludes the program name.
/// Reads DIMACS from `in` when the input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace qclique::cli
