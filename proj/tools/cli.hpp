#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wpgap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceCap = 3;

/// Runs `wpgap <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpgap::cli
