#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mps::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // impossible, not equivalent, failed check, domain error
inline constexpr int kOpen = 2;      // open, too large, partial search
inline constexpr int kUsage = 64;
inline constexpr int kIo = 74;

/// Runs mpstool with `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mps::cli
