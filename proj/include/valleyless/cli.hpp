#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vls::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one command line (arguments after the program name). Results go to
/// `out`, usage and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3,2,1", or the compact digit form "321" for at most nine entries.
std::vector<int> parse_permutation_arg(const std::string& text);

/// Comma-separated integers; the empty string is the empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace vls::cli
