#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthowell {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes of the batch front door.
enum ExitCode : int {
    kExitOk = 0,            // all requested checks passed
    kExitCheckFailed = 1,   // a check exceeded its tolerance
    kExitUsage = 2,         // unknown subcommand/flag or malformed invocation
    kExitBadRange = 3,      // numerically invalid parameter
    kExitOutputError = 4,   // output path not writable
};

// Runs one subcommand. `args` excludes the program name. Reports go to
// `out` or to --out; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthowell
