#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qstirling/cli.hpp"
#include "qstirling/errors.hpp"

namespace qstirling::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && space(s.front())) s.remove_prefix(1);
    while (!s.empty() && space(s.back())) s.remove_suffix(1);
    return s;
}

bool valid_key(std::string_view key) {
    return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
        return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '-';
    });
}

}  // namespace

std::vector<std::string> parse_config_text(std::string_view text) {
    std::vector<std::string> args;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError("config line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (!valid_key(key) || key == "config")
            throw ValidationError("config line " + std::to_string(line_no) + ": invalid key '" + std::string(key) + "'");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (value.empty())
            throw ValidationError("config line " + std::to_string(line_no) + ": missing value for '" + std::string(key) + "'");
        args.push_back("--" + std::string(key) + "=" + std::string(value));
    }
    return args;
}

std::vector<std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace qstirling::cli
