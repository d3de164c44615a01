#pragma once

#include <iosfwd>

namespace gstest {

// Parses argv and runs one subcommand, writing results to `out` and
// diagnostics to `err`. Returns the process exit code: 0 success, 2 bad
// usage or invalid input, 3 feasible-looking request the graph cannot
// satisfy, 1 internal cross-check failure.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace gstest
