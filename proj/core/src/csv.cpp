#include "techrank/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "techrank/error.hpp"

namespace techrank::csv {

Reader::Reader(std::istream& in, char delimiter) : in_(in), delimiter_(delimiter) {}

bool Reader::next(std::vector<std::string>& fields) {
    fields.clear();
    if (first_) {
        first_ = false;
        if (in_.peek() == 0xEF) {
            char bom[3];
            in_.read(bom, 3);
            if (!(bom[0] == '\xEF' && bom[1] == '\xBB' && bom[2] == '\xBF')) {
                for (int i = 2; i >= 0; --i) in_.putback(bom[i]);
            }
        }
    }
    if (in_.peek() == std::char_traits<char>::eof()) return false;

    record_line_ = line_;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    for (;;) {
        const int raw = in_.get();
        if (raw == std::char_traits<char>::eof()) {
            if (quoted) throw ParseError("unterminated quoted field starting on line " + std::to_string(record_line_));
            fields.push_back(std::move(field));
            return true;
        }
        const char ch = static_cast<char>(raw);
        if (quoted) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"' && field.empty() && !field_was_quoted) {
            quoted = true;
            field_was_quoted = true;
        } else if (ch == delimiter_) {
            fields.push_back(std::move(field));
            field.clear();
            field_was_quoted = false;
        } else if (ch == '\r' && in_.peek() == '\n') {
            continue;
        } else if (ch == '\n') {
            ++line_;
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
        }
    }
}

std::optional<std::size_t> Table::column(std::string_view name) const {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
}

Table read_table(std::istream& in, char delimiter) {
    Reader reader(in, delimiter);
    Table table;
    if (!reader.next(table.header)) throw ParseError("missing header row");
    std::set<std::string> seen;
    for (auto& name : table.header) {
        // Header cells are matched after trimming.
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.erase(name.begin());
        if (name.empty()) throw ParseError("malformed header: empty column name");
        if (!seen.insert(name).second) throw ParseError("malformed header: duplicate column '" + name + "'");
    }
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        table.rows.push_back(fields);
        table.row_lines.push_back(reader.line());
    }
    return table;
}

Table read_table_file(const std::string& path, char delimiter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return read_table(in, delimiter);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_row(std::ostream& out, const std::vector<std::string>& fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.put(delimiter);
        const std::string& f = fields[i];
        const bool needs_quotes = f.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string::npos;
        if (!needs_quotes) {
            out << f;
            continue;
        }
        out.put('"');
        for (char ch : f) {
            if (ch == '"') out.put('"');
            out.put(ch);
        }
        out.put('"');
    }
    out.put('\n');
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    for (char ch : text) {
        const bool ok = (ch >= '0' && ch <= '9') || ch == '.' || ch == '-' || ch == 'e' || ch == 'E' || ch == '+';
        if (!ok) return std::nullopt;
    }
    double value = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value, std::chars_format::general);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

}  // namespace techrank::csv
