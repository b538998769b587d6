#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simstat::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;        // usage, parse and construction errors
inline constexpr int kEvaluation = 3;   // evaluation and domain errors
inline constexpr int kNoConvergence = 4;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; every diagnostic line starts with "error:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace simstat::cli
