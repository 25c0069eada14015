#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kParseError = 2, kDomainError = 3, kCapExceeded = 4 };

inline constexpr int kDefaultNckCap = 7;
inline constexpr int kDefaultPairingCap = 5;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
