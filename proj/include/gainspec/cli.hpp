#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gainspec::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
/// The check the command performs failed (inconsistent report, lemma
/// violation, energy not doubling).
inline constexpr int kExitCheckFailed = 1;
/// Bad arguments, unreadable or malformed input.
inline constexpr int kExitUsage = 2;

inline constexpr unsigned long long kDefaultSeed = 42;

/// Runs `gainspec <args...>`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gainspec::cli
