#pragma once

#include <iosfwd>

namespace sdual::cli {

enum ExitCode : int {
    kSuccess = 0,     ///< success, or the checked object is feasible / a solution
    kCheckFailed = 1, ///< checked and found false
    kUsageError = 2,  ///< bad arguments, unreadable file, parse error, unsupported size
    kInfeasible = 3,  ///< the primal or dual feasible set is empty
};

/// Runs one sdual subcommand. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdual::cli
