#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "srreal/realizability.hpp"

namespace srreal::cli {

// Exit codes shared by the subcommands.
inline constexpr int kExitRealizable = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSufficientOnly = 10;
inline constexpr int kExitNotRealizable = 20;
inline constexpr int kExitUnknown = 30;
inline constexpr int kExitHypothesisViolated = 40;

int exit_code(const Verdict& verdict);

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace srreal::cli
