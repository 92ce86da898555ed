#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ng {

// One table cell.  Exact quantities go in as integers or text (fractions
// "num/den"); floating point is permitted only in columns whose name ends
// in "_approx", and the emitters enforce that.
struct Cell {
    enum class Kind { integer, text, boolean, approx, empty };
    Kind kind = Kind::empty;
    std::int64_t i = 0;
    std::string s;
    double d = 0.0;
    bool b = false;

    static Cell of_int(std::int64_t v);
    static Cell of_uint(std::uint64_t v);
    static Cell of_text(std::string v);
    static Cell of_bool(bool v);
    static Cell of_approx(double v);
    static Cell none();
};

// Rectangular results plus the parameter echo that reproduces the run.
// Emission is deterministic: byte-identical output for identical content.
struct Table {
    std::vector<std::pair<std::string, std::string>> params;  // echoed in order
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_param(const std::string& key, const std::string& value);
    void add_row(std::vector<Cell> row);  // must match columns in width
};

enum class TableFormat { csv, ndjson, json };
TableFormat parse_format(const std::string& name);  // "csv" | "ndjson" | "json"

// CSV: "# key=value" comment lines, header row, data rows.
// NDJSON: first line {"params": {...}}, then one object per row.
// JSON: single document {"params": {...}, "columns": [...], "rows": [...]}.
std::string emit_table(const Table& t, TableFormat format);

// Minimal JSON string escaping (quotes, backslash, control characters).
std::string json_escape(const std::string& s);

}  // namespace ng
