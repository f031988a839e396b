#pragma once

#include <iosfwd>

namespace nmfr {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or search failed
inline constexpr int kExitInputError = 2;

// Runs the nmfr command line (argv[0] is the program name) with the given
// output streams and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nmfr
