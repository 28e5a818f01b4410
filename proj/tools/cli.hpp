#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kzres::cli {

/// Environment variable consulted for the worker count when --workers is
/// absent.
inline constexpr const char* kWorkersEnv = "KZRES_WORKERS";

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Results go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kzres::cli
