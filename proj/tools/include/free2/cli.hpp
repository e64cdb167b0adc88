#pragma once

#include <ostream>
#include <span>
#include <string>

namespace free2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxWindow = 16;

/// Runs one invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace free2::cli
