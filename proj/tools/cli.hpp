#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidity::cli {

/// Dispatches one command line (without the program name). Writes results to
/// `out` and diagnostics to `err`.
///
/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string (used by the manifest runner).
std::string sha256_hex(const std::string& bytes);

} // namespace rigidity::cli
