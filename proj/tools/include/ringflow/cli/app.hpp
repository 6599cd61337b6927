#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitValidation = 2;

/// Runs one command line (arguments without the program name). Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringflow::cli
