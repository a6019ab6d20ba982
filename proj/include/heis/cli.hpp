#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the heis_slor command line. `args` excludes the program name.
/// Results go to `out`, or to the file named by --output; diagnostics go
/// to `err`. Returns 0 on success, 1 on domain errors (points not causally
/// related, infeasible problems) and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heis::cli
