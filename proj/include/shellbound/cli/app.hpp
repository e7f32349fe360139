#pragma once

#include <ostream>

namespace shellbound::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

// Parses argv, runs one subcommand, writes the JSON report to `out` and
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shellbound::cli
