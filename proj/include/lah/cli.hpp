#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lah {

// Parses argv-style arguments (without the program name) and runs the
// requested subcommand, writing results to `out` and diagnostics to `err`.
// Returns the process exit code: 0 on success, 1 on usage errors, 2 when a
// verification check fails or a tolerance turns out to be unreachable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lah
