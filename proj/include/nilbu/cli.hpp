#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilbu::cli {

enum ExitCode : int { Success = 0, DomainError = 1, VerificationFailure = 2 };

/// Entry point of the `nilbu` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nilbu::cli
