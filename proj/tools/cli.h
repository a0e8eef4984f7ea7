#pragma once

#include <iosfwd>

namespace gauss::cli {

inline constexpr int kExitRealizable = 0;
inline constexpr int kExitNotRealizable = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line against the given streams and returns the exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gauss::cli
