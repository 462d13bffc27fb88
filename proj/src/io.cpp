#include "vgs/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace vgs {

namespace {

// Splits one CSV line into fields, honoring double quotes ("" escapes a
// quote). Fields come back unquoted.
std::vector<std::string> split_csv_row(const std::string& line, std::size_t line_number) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t p = 0; p < line.size(); ++p) {
        const char c = line[p];
        if (quoted) {
            if (c == '"') {
                if (p + 1 < line.size() && line[p + 1] == '"') {
                    cur += '"';
                    ++p;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_number);
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_value_cell(std::string cell, std::size_t line_number) {
    cell = trim(cell);
    // thousands separators inside quoted numbers, e.g. "1,234.5"
    cell.erase(std::remove(cell.begin(), cell.end(), ','), cell.end());
    if (cell.empty()) throw ParseError("empty value cell", line_number);
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("non-numeric cell '" + cell + "'", line_number);
    if (!std::isfinite(value)) throw ParseError("non-finite value '" + cell + "'", line_number);
    return value;
}

}  // namespace

std::vector<double> read_series_csv(std::istream& in, const SeriesFile& file) {
    std::size_t column = 0;
    bool column_resolved = false;
    if (const auto* idx = std::get_if<std::size_t>(&file.value_column)) {
        column = *idx;
        column_resolved = true;
    } else if (!file.has_header) {
        throw ConfigError("value column given by name requires a header row");
    }

    std::vector<double> values;
    std::string line;
    std::size_t line_number = 0;
    bool header_pending = file.has_header;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_row(line, line_number);
        if (header_pending) {
            header_pending = false;
            if (!column_resolved) {
                const auto& name = std::get<std::string>(file.value_column);
                auto it = std::find_if(fields.begin(), fields.end(),
                                       [&](const std::string& f) { return trim(f) == name; });
                if (it == fields.end())
                    throw ParseError("column '" + name + "' not found in header", line_number);
                column = static_cast<std::size_t>(it - fields.begin());
                column_resolved = true;
            }
            continue;
        }
        if (column >= fields.size())
            throw ParseError("row has " + std::to_string(fields.size()) +
                                 " columns, value column is " + std::to_string(column),
                             line_number);
        values.push_back(parse_value_cell(fields[column], line_number));
    }
    if (values.empty()) throw EmptyInputError("no data rows in series input");
    if (file.newest_first) std::reverse(values.begin(), values.end());
    return values;
}

std::vector<double> read_series_csv(const SeriesFile& file) {
    std::ifstream in(file.path);
    if (!in) throw IoError("cannot open series file: " + file.path);
    return read_series_csv(in, file);
}

void write_edge_list(const VisibilityGraph& g, std::ostream& out) {
    for (const auto& [i, j] : g.edges_sorted()) out << i << ' ' << j << '\n';
    if (!out) throw IoError("edge list write failed");
}

std::string format_seconds(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2E", seconds);
    return buf;
}

namespace {

// Values are plain names in practice; quote defensively if a separator leaks in.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_timings_csv(const std::vector<TimingRecord>& records, std::ostream& out) {
    out << "algorithm,series,window,repeat,measure,seconds\n";
    for (const auto& r : records) {
        out << csv_field(r.algorithm) << ',' << csv_field(r.series) << ',' << r.window << ','
            << r.repeat << ',' << r.measure << ',' << format_seconds(r.seconds) << '\n';
    }
    if (!out) throw IoError("timings CSV write failed");
}

}  // namespace vgs
