#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covres {

// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceLimit = 3;
inline constexpr int kExitConjectureMismatch = 4;

// Runs the CLI with the given arguments (without argv[0]); writes to the
// supplied streams and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace covres
