#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hsx {

// One parsed CSV record plus the 1-based line it started on, for error
// reporting against the source file.
struct CsvRow {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    // Index of a header column, or throws naming the column and file.
    std::size_t column(std::string_view name, std::string_view file) const;
};

// RFC-4180 parser: quoted fields, doubled-quote escapes, embedded newlines,
// CRLF or LF endings. Malformed input throws with the offending line number.
CsvTable parse_csv(std::istream& in, std::string_view file);
CsvTable read_csv_file(const std::string& path);

std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);

}  // namespace hsx
