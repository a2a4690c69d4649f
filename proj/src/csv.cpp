#include "hsx/csv.hpp"

#include <fstream>

#include "hsx/common.hpp"

namespace hsx {

std::size_t CsvTable::column(std::string_view name, std::string_view file) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw Error(std::string(file) + ": missing column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::istream& in, std::string_view file) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::vector<CsvRow> records;
    CsvRow row;
    row.line = 1;
    std::string field;
    bool in_quotes = false;
    bool row_has_content = false;
    std::size_t line = 1;

    auto end_field = [&] {
        row.fields.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        records.push_back(std::move(row));
        row = CsvRow{};
        row.line = line;
        row_has_content = false;
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                    if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                        throw Error(std::string(file) + ":" + std::to_string(line)
                                    + ": unexpected character after closing quote");
                    }
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
                ++i;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty()) {
                    throw Error(std::string(file) + ":" + std::to_string(line)
                                + ": quote inside unquoted field");
                }
                in_quotes = true;
                row_has_content = true;
                ++i;
                break;
            case ',':
                end_field();
                row_has_content = true;
                ++i;
                break;
            case '\r':
                ++i;
                if (i < n && text[i] == '\n') {
                    ++i;
                    ++line;
                    end_row();
                    row.line = line;
                }
                break;
            case '\n':
                ++i;
                ++line;
                end_row();
                row.line = line;
                break;
            default:
                field.push_back(c);
                row_has_content = true;
                ++i;
                break;
        }
    }
    if (in_quotes) {
        throw Error(std::string(file) + ":" + std::to_string(row.line) + ": unterminated quoted field");
    }
    if (row_has_content || !field.empty() || !row.fields.empty()) {
        end_row();
    }

    CsvTable table;
    if (records.empty()) return table;
    table.header = std::move(records.front().fields);
    records.erase(records.begin());
    for (auto& r : records) {
        if (r.fields.size() == 1 && r.fields[0].empty()) continue;  // stray blank line
        if (r.fields.size() != table.header.size()) {
            throw Error(std::string(file) + ":" + std::to_string(r.line) + ": expected "
                        + std::to_string(table.header.size()) + " fields, got "
                        + std::to_string(r.fields.size()));
        }
        table.rows.push_back(std::move(r));
    }
    return table;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    return parse_csv(in, path);
}

std::string csv_escape(std::string_view field) {
    bool needs_quotes = false;
    for (char c : field) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    return out;
}

}  // namespace hsx
