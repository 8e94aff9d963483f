#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nt::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

// Entry point of `nt`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nt::cli
