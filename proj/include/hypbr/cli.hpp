#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypbr::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;      // e.g. no local point found
inline constexpr int kUsage = 2;            // unknown flag / missing value
inline constexpr int kBadPoly = 3;          // malformed polynomial
inline constexpr int kZeroC = 4;
inline constexpr int kNotSquarefree = 5;
inline constexpr int kNotUnit = 6;

struct UsageError {
    int code;
    std::string message;
};

enum class CommandKind { Gamma, Points, Obstruct, TwistFamily, Residues, SelfTest };

struct Command {
    CommandKind kind;
    // validated payload (fields used depend on the command)
    std::string c, f, ell, place;
    int effort = 4;
    long seed = 0;
    long cmin = 0, cmax = 0;
    bool pretty = false;
};

/// Parse and validate argv (excluding the program name). Throws UsageError
/// with the exit code naming the offending flag or value.
Command parse_args(const std::vector<std::string>& args);

/// Execute. JSON on `out`; with --pretty a human summary goes to `err`.
/// Returns the process exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run with UsageError handling; the CLI main.
int main_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypbr::cli
