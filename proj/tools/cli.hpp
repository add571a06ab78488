#ifndef LATFRAME_TOOLS_CLI_HPP
#define LATFRAME_TOOLS_CLI_HPP

#include <iosfwd>

namespace latframe::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    bad_input = 2,
    limit_exceeded = 3,
    invariant_failure = 4,
};

/// Runs the command line tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latframe::cli

#endif  // LATFRAME_TOOLS_CLI_HPP
