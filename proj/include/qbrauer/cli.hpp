#pragma once

// Command-line front end: verify, build, dims and export.

#include <iosfwd>
#include <string>
#include <vector>

namespace qbrauer {

/// Exit codes: 0 all relations pass, 1 some relation fails, 2 usage or guard
/// error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

/// "a" or "a..b" with a <= b; throws std::invalid_argument otherwise.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace qbrauer
