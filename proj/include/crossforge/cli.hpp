#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossforge {

// Exit codes of the command-line front end.
constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;     // property does not hold (UNSAT, not 1-planar, ...)
constexpr int kExitUsage = 2;     // bad arguments or unreadable input
constexpr int kExitInternal = 3;  // an internal invariant failed

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossforge
