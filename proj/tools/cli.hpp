#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace birkhoff::cli {

enum ExitCode : int {
    kOk = 0,
    kIoFailure = 1,
    kUsage = 2,
    kDomain = 3,
    kResonance = 4,
};

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// (or --output), errors to `err` as a single-line JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace birkhoff::cli
