#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace termrw {

/// Exit codes: 0 affirmative, 1 negative finding, 2 unknown or error.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitMaybe = 2 };

/// Runs the command line `argv` (argv[0] is the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace termrw
