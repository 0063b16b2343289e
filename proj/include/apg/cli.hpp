#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apg::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // invalid graph or failed verification
inline constexpr int kUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apg::cli
