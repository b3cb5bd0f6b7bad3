#pragma once

#include <iosfwd>

namespace antires {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;         // I/O, parse or precondition error
inline constexpr int kExitNotAnonymous = 2;  // verification failed
inline constexpr int kExitStuck = 3;         // stuck or infeasible algorithm run

// Runs one command line (argv[0] is the program name). JSON goes to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace antires
