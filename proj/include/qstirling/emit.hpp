#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qstirling/sweep.hpp"

namespace qstirling {

/// Shortest round-trip decimal: fixed notation for 1e-3 <= |x| < 1e6 (and 0),
/// scientific otherwise; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double x);

/// Header line "alpha,eta,W,Q_AB,Q_BC,Q_CD,Q_DA,eta_carnot,turnover_A,...,warnings"
/// followed by one line per row, '\n' terminated.
std::string emit_csv(const std::vector<SweepRow>& rows);

/// Array of flat objects with the CSV column names; NaN becomes null.
std::string emit_json(const std::vector<SweepRow>& rows);

/// Inverse of emit_csv. Throws ValidationError on malformed input.
std::vector<SweepRow> parse_csv(std::string_view text);

/// Inverse of emit_json. Throws ValidationError on malformed input.
std::vector<SweepRow> parse_json(std::string_view text);

/// Split one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quote a CSV field if it contains a separator, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace qstirling
