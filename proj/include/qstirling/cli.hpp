#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qstirling::cli {

enum ExitCode : int { exit_ok = 0, exit_config_error = 2, exit_all_failed = 3 };

/// Flat configuration text, one `key = value` per line, `#` comments. Every key is
/// the long name of a command-line flag; the result is the equivalent
/// `--key=value` argument list. Throws ValidationError on malformed lines.
std::vector<std::string> parse_config_text(std::string_view text);

/// Reads and parses a configuration file. Throws ValidationError.
std::vector<std::string> read_config_file(const std::string& path);

/// Entry point of the `qstirling` tool. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qstirling::cli
