// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topolect::csv {

/// One parsed row; fields are unescaped.
using Row = std::vector<std::string>;

struct Document {
    std::vector<Row> rows;
    /// 1-based line on which each row starts.
    std::vector<long> lines;
};

/// Parse an entire CSV document. Handles quoted fields (RFC 4180 style,
/// "" escapes a quote inside a quoted field) and tolerates CRLF endings.
/// Empty lines are skipped. Throws Error with the 1-based line number on
/// malformed input (unterminated quote, stray quote).
Document parse(std::istream& in);
Document parse_file(const std::string& path);
Document parse_string(const std::string& text);

/// Quote a field if it contains a comma, quote or newline.
std::string escape(const std::string& field);

/// Join fields into one CSV line (no trailing newline).
std::string join(const Row& fields);

/// Format a double with enough digits to round-trip (17 significant digits).
std::string format_full(double x);

/// Shorter fixed-point style formatting for human-facing output.
std::string format_short(double x);

} // namespace topolect::csv
