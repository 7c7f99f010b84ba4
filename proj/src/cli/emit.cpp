#include "qstirling/emit.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "qstirling/errors.hpp"

namespace qstirling {

namespace {

constexpr std::array<const char*, 13> columns{"alpha",      "eta",        "W",          "Q_AB",       "Q_BC",
                                              "Q_CD",       "Q_DA",       "eta_carnot", "turnover_A", "turnover_B",
                                              "turnover_C", "turnover_D", "warnings"};

constexpr std::array<double SweepRow::*, 8> numeric_fields{
    &SweepRow::alpha, &SweepRow::eta, &SweepRow::work, &SweepRow::q_ab, &SweepRow::q_bc, &SweepRow::q_cd,
    &SweepRow::q_da, &SweepRow::eta_carnot};

double parse_number(const std::string& s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ValidationError("malformed number '" + s + "'");
    return v;
}

bool parse_flag(const std::string& s) {
    if (s == "1") return true;
    if (s == "0") return false;
    throw ValidationError("malformed flag '" + s + "'");
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const double a = std::abs(x);
    const auto fmt = (a == 0.0 || (a >= 1e-3 && a < 1e6)) ? std::chars_format::fixed : std::chars_format::scientific;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, fmt);
    return std::string(buf.data(), ptr);
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else {
            fields.back() += ch;
        }
    }
    if (quoted) throw ValidationError("unterminated quoted CSV field");
    return fields;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (auto field : numeric_fields) {
            out += format_number(row.*field);
            out += ',';
        }
        for (bool t : row.turnover) {
            out += t ? '1' : '0';
            out += ',';
        }
        out += csv_field(row.warnings);
        out += '\n';
    }
    return out;
}

std::string emit_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < numeric_fields.size(); ++i) {
            const double v = row.*numeric_fields[i];
            if (std::isfinite(v))
                obj[columns[i]] = v;
            else
                obj[columns[i]] = nullptr;
        }
        for (std::size_t i = 0; i < 4; ++i) obj[columns[8 + i]] = row.turnover[i];
        obj["warnings"] = row.warnings;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<SweepRow> parse_csv(std::string_view text) {
    std::vector<SweepRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("CSV input is empty");
    const auto header = split_csv_line(line);
    if (header.size() != columns.size()) throw ValidationError("unexpected CSV header");
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (header[i] != columns[i]) throw ValidationError("unexpected CSV column '" + header[i] + "'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != columns.size()) throw ValidationError("CSV row has the wrong number of fields");
        SweepRow row;
        for (std::size_t i = 0; i < numeric_fields.size(); ++i) row.*numeric_fields[i] = parse_number(f[i]);
        for (std::size_t i = 0; i < 4; ++i) row.turnover[i] = parse_flag(f[8 + i]);
        row.warnings = f[12];
        row.failed = row.warnings.rfind("error:", 0) == 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRow> parse_json(std::string_view text) {
    std::vector<SweepRow> rows;
    try {
        const auto arr = nlohmann::json::parse(text);
        if (!arr.is_array()) throw ValidationError("JSON input must be an array");
        for (const auto& obj : arr) {
            SweepRow row;
            for (std::size_t i = 0; i < numeric_fields.size(); ++i) {
                const auto& v = obj.at(columns[i]);
                row.*numeric_fields[i] = v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
            }
            for (std::size_t i = 0; i < 4; ++i) row.turnover[i] = obj.at(columns[8 + i]).get<bool>();
            row.warnings = obj.at("warnings").get<std::string>();
            row.failed = row.warnings.rfind("error:", 0) == 0;
            rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return rows;
}

}  // namespace qstirling
