#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbowlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// args excludes the program name. Output that a shell user would pipe goes
// to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbowlab::cli
