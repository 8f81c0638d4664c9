#pragma once

#include <iosfwd>

namespace octaspec {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitResourceGuard = 3;

// Parses argv and runs one subcommand (matrices, enumerate, intensity,
// simulate, verify). Results go to `out` unless --out names a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace octaspec
