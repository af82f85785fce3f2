#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wildchar::cli {

/// Exit codes of the wildchar tool.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Entry point shared by the binary and the tests. args excludes argv[0].
/// Results go to `out`; errors are printed to `out` as
/// {"error": <code>, "message": ...}; CLI11 help text goes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wildchar::cli
