#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symscat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;

/// Runs one symscat invocation. `args` excludes the program name. Reports go
/// to `out` unless --out redirects them; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symscat::cli
