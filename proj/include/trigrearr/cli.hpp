#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigrearr {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitParse = 2,
    kExitDomain = 3,
    kExitBudget = 4,
};

/// Runs one command line (args[0] is the program name). Primary output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trigrearr
