#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace techrank::csv {

/**
 * Streaming reader for delimiter-separated text: double-quoted fields may
 * contain the delimiter, doubled quotes and line breaks; CRLF line endings
 * are accepted. A UTF-8 byte-order mark at the start of the stream is
 * skipped.
 */
class Reader {
public:
    explicit Reader(std::istream& in, char delimiter = ',');

    /// Reads the next record into `fields`. Returns false at end of input.
    /// Throws ParseError on an unterminated quoted field.
    bool next(std::vector<std::string>& fields);

    /// 1-based line number where the last record started.
    std::size_t line() const { return record_line_; }

private:
    std::istream& in_;
    char delimiter_;
    std::size_t line_ = 1;
    std::size_t record_line_ = 0;
    bool first_ = true;
};

/// Header-indexed view of a whole file.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;

    std::optional<std::size_t> column(std::string_view name) const;
};

/// Reads a header row and every following record. Throws ParseError on a
/// missing or malformed header (empty or duplicate column names).
Table read_table(std::istream& in, char delimiter = ',');
Table read_table_file(const std::string& path, char delimiter = ',');

void write_row(std::ostream& out, const std::vector<std::string>& fields, char delimiter = ',');

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Locale-independent parse of a plain decimal number (optional sign,
/// digits, optional fraction and exponent). Grouping separators, embedded
/// spaces, inf and nan are rejected.
std::optional<double> parse_double(std::string_view text);

}  // namespace techrank::csv
