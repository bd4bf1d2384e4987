#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaoscrypt {

/// Exit codes of run_cli.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,      // unknown subcommand or flag, missing argument
    kExitIo = 3,         // file cannot be opened, read or written
    kExitFormat = 4,     // malformed PGM or key file
    kExitDimension = 5,  // image geometry unsupported by the cipher
    kExitDomain = 6,     // key value out of range
    kExitInternal = 10,
};

/// Subcommands: keygen | encrypt | decrypt | analyze. `args` excludes the program name.
/// Errors print exactly one line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaoscrypt
