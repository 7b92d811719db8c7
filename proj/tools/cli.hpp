#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumplete::cli {

/// Process exit codes. Every path through run() returns one of these.
enum ExitCode : int {
  kOk = 0,             ///< verified / solved / formula satisfied
  kNegative = 1,       ///< does not verify / unsolvable / disagreement
  kBadInput = 2,       ///< usage, I/O or format error
  kResourceLimit = 3,  ///< search stopped at a configured limit
  kNotRegular = 4,     ///< formula is not 3-CNF+3 shaped
};

/// Runs the command line `args` (args[0] is the program name). A path of
/// "-" reads from `in`; machine output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace sumplete::cli
