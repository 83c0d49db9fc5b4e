#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dbldom::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,   ///< unparsable input, bad flags, unreadable files
    kInfeasible = 2,   ///< graph or parameters outside a precondition
    kViolation = 3,    ///< a scan found a counterexample or fixture mismatch
};

/// Runs the command line `args` (without the program name). Standard input
/// is read from `in` when an input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dbldom::cli
