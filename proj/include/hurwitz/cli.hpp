#pragma once

#include <ostream>
#include <span>
#include <string>

namespace hurwitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
