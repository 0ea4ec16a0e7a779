#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiletopo::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kRegime = 2;
inline constexpr int kVerification = 3;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiletopo::cli
