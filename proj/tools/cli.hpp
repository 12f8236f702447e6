#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stegedge::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kOther = 1;
inline constexpr int kIoOrParse = 2;
inline constexpr int kCapacity = 3;
inline constexpr int kIntegrity = 4;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stegedge::cli
