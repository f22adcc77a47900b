#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace helix {

/// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  ///< "No", "distinct", corpus failure, no helix
inline constexpr int kExitInput = 2;     ///< malformed input

/// Runs the command line `args` (without the program name). Output is
/// deterministic: identical arguments give byte-identical streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helix
