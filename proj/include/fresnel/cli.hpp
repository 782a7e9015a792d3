#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fresnel::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // selftest found a violation
inline constexpr int kExitUsage = 2;    // parse or domain error

/// Runs the `fresnel` command line. `args[0]` is the program name.
/// Subcommands: eval, table, plan, clothoid, selftest, bench.
/// FRESNEL_PLAN_FILE, when set and no --eps is given, names a plan JSON
/// file to use instead of the built-in double-precision plan.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g-style text (enough to round-trip a double) with a '.' decimal
/// point regardless of locale.
std::string format_real(double v);

}  // namespace fresnel::cli
