#include "core/table.hpp"

#include <cmath>
#include <cstdio>

#include "core/error.hpp"

namespace ng {

Cell Cell::of_int(std::int64_t v) {
    Cell c;
    c.kind = Kind::integer;
    c.i = v;
    return c;
}

Cell Cell::of_uint(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(INT64_MAX)) fail_internal("table integer out of range");
    return of_int(static_cast<std::int64_t>(v));
}

Cell Cell::of_text(std::string v) {
    Cell c;
    c.kind = Kind::text;
    c.s = std::move(v);
    return c;
}

Cell Cell::of_bool(bool v) {
    Cell c;
    c.kind = Kind::boolean;
    c.b = v;
    return c;
}

Cell Cell::of_approx(double v) {
    if (!std::isfinite(v)) fail_internal("non-finite value in _approx column");
    Cell c;
    c.kind = Kind::approx;
    c.d = v;
    return c;
}

Cell Cell::none() { return Cell{}; }

void Table::add_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) fail_internal("table row width mismatch");
    rows.push_back(std::move(row));
}

TableFormat parse_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "ndjson") return TableFormat::ndjson;
    if (name == "json") return TableFormat::json;
    fail_usage("unknown format '" + name + "' (expected csv, ndjson, or json)");
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += static_cast<char>(ch);
                }
        }
    }
    return out;
}

namespace {

bool ends_with_approx(const std::string& col) {
    static const std::string suffix = "_approx";
    return col.size() >= suffix.size() &&
           col.compare(col.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string approx_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string out = "\"";
    for (char ch : raw) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string cell_csv(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::integer: return std::to_string(c.i);
        case Cell::Kind::text: return csv_field(c.s);
        case Cell::Kind::boolean: return c.b ? "true" : "false";
        case Cell::Kind::approx: return approx_text(c.d);
        case Cell::Kind::empty: return "";
    }
    fail_internal("unreachable cell kind");
}

std::string cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::integer: return std::to_string(c.i);
        case Cell::Kind::text: return "\"" + json_escape(c.s) + "\"";
        case Cell::Kind::boolean: return c.b ? "true" : "false";
        case Cell::Kind::approx: return approx_text(c.d);
        case Cell::Kind::empty: return "null";
    }
    fail_internal("unreachable cell kind");
}

void check_approx_discipline(const Table& t) {
    for (const auto& row : t.rows)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j].kind == Cell::Kind::approx && !ends_with_approx(t.columns[j]))
                fail_internal("floating-point cell in non-_approx column '" + t.columns[j] + "'");
}

std::string params_json_object(const Table& t) {
    std::string out = "{";
    for (std::size_t i = 0; i < t.params.size(); ++i) {
        if (i) out += ",";
        out += "\"" + json_escape(t.params[i].first) + "\":\"" + json_escape(t.params[i].second) +
               "\"";
    }
    out += "}";
    return out;
}

std::string row_json_object(const Table& t, const std::vector<Cell>& row) {
    std::string out = "{";
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out += ",";
        out += "\"" + json_escape(t.columns[j]) + "\":" + cell_json(row[j]);
    }
    out += "}";
    return out;
}

}  // namespace

std::string emit_table(const Table& t, TableFormat format) {
    check_approx_discipline(t);
    std::string out;
    switch (format) {
        case TableFormat::csv: {
            for (const auto& [k, v] : t.params) out += "# " + k + "=" + v + "\n";
            for (std::size_t j = 0; j < t.columns.size(); ++j) {
                if (j) out += ",";
                out += csv_field(t.columns[j]);
            }
            out += "\n";
            for (const auto& row : t.rows) {
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) out += ",";
                    out += cell_csv(row[j]);
                }
                out += "\n";
            }
            return out;
        }
        case TableFormat::ndjson: {
            out += "{\"params\":" + params_json_object(t) + "}\n";
            for (const auto& row : t.rows) out += row_json_object(t, row) + "\n";
            return out;
        }
        case TableFormat::json: {
            out += "{\n  \"params\": " + params_json_object(t) + ",\n  \"columns\": [";
            for (std::size_t j = 0; j < t.columns.size(); ++j) {
                if (j) out += ",";
                out += "\"" + json_escape(t.columns[j]) + "\"";
            }
            out += "],\n  \"rows\": [";
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                out += i ? ",\n    " : "\n    ";
                out += row_json_object(t, t.rows[i]);
            }
            out += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
            return out;
        }
    }
    fail_internal("unreachable table format");
}

}  // namespace ng
