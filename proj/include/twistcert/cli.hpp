#pragma once

#include <iosfwd>
#include <string>

#include "twistcert/int_matrix.hpp"

namespace twistcert {

/// Exit codes shared by every subcommand.
enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_input_error = 2, exit_unknown = 3 };

inline constexpr int kSchemaVersion = 1;

/// Entry point of the twistcert tool. Writes results to out and diagnostics
/// to err; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Reads a square integer matrix: one row per line, whitespace-separated
/// entries, blank lines and lines starting with '#' ignored. Throws
/// ParseError (offset = 1-based line number) on malformed text.
IntMatrix parse_matrix_text(const std::string& text);

/// Closure cache path: the flag value if non-empty, else $TWISTCERT_CACHE,
/// else a file in the system temp directory.
std::string resolve_cache_path(const std::string& flag_value);

}  // namespace twistcert
