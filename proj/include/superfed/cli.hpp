#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superfed {

inline constexpr int exit_success = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs the `superfed` command line on `args` (without the program name).
///
///   validate <spec>                          form checks only
///   fedosov <spec>                           N, corrected connection, verification
///   deform <spec> [--seed n] [--degree d]    deformation by an admissible S
///   selftest [--charts n] [--seed s]         randomized corpus and kernel suites
///
/// Every command accepts --json <path>. Returns 0 when every verification
/// passes, 1 when one fails and 2 on usage, syntax or load errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superfed
