#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperspec::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kPrecondition = 3,
    kNoConvergence = 4,
};

/// Runs one command. `args` excludes the program name; "-" as an input path
/// reads `in`. JSON goes to `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyperspec::cli
