#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inpp {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitUnknown = 4 };

/// Runs one subcommand; args excludes the program name. The report goes to
/// `out`, error messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inpp
