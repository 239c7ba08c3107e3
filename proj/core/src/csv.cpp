// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/csv.hpp"

#include "topolect/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace topolect::csv {

Document parse(std::istream& in) {
    Document doc;
    Row row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    bool row_started = false;
    long line = 1;
    long row_line = 1;
    long quote_open_line = 0;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        if (row_started || field_started || !row.empty()) {
            end_field();
            doc.rows.push_back(row);
            doc.lines.push_back(row_line);
            row.clear();
        }
        row_started = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty())
                throw Error("csv: stray quote in unquoted field at line " + std::to_string(line));
            in_quotes = true;
            quote_open_line = line;
            field_started = true;
            if (!row_started) row_line = line;
            row_started = true;
            break;
        case ',':
            end_field();
            if (!row_started) row_line = line;
            row_started = true;
            break;
        case '\r':
            break;
        case '\n':
            end_row();
            ++line;
            break;
        default:
            field += c;
            field_started = true;
            if (!row_started) row_line = line;
            row_started = true;
            break;
        }
    }
    if (in_quotes)
        throw Error("csv: unterminated quote opened at line " + std::to_string(quote_open_line));
    end_row();
    return doc;
}

Document parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("csv: cannot open file: " + path);
    return parse(in);
}

Document parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string join(const Row& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape(fields[i]);
    }
    return out;
}

std::string format_full(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_short(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace topolect::csv
