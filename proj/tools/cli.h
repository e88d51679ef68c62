#pragma once

#include <ostream>

namespace qsat {

/// Exit statuses of the qsat command line. `solve` instead follows the
/// SAT-competition convention (10 satisfiable, 20 unsatisfiable).
enum ExitCode : int {
    kExitOk = 0,
    kExitNotEquivalent = 1,
    kExitError = 2,
};

/// Entry point of the `qsat` tool, separated from main() for testing.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qsat
