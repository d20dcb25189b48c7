#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segre::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kOracleTrouble = 3;

/// Runs one subcommand.  `args` includes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segre::cli
