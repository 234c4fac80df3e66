#ifndef E8_CLI_HPP
#define E8_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace e8 {

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_malformed_input = 1;
inline constexpr int exit_reconstruction_failed = 2;
inline constexpr int exit_roundtrip_mismatch = 3;

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Errors go to `err` as one JSON object per line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e8

#endif  // E8_CLI_HPP
