#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twogon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the `twogon` command line. args excludes the program name.
/// Data goes to out, diagnostics to err. Returns 0, 2 (usage or domain
/// error) or 3 (numerical or precision failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twogon::cli
