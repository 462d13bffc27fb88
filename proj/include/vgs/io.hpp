#pragma once

// Series ingestion from delimiter-separated files and serialization of edge
// lists and timing records.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "vgs/graph.hpp"

namespace vgs {

// Description of a close-price style CSV: one series value per row, selected
// by column name or 0-based position (default: second column).
struct SeriesFile {
    std::string path;
    std::variant<std::size_t, std::string> value_column = std::size_t{1};
    bool has_header = true;
    bool newest_first = false;  // reverse after reading so output is oldest-first
};

// Chronological (oldest-first) sequence of finite values. Cells are unquoted
// and thousands separators stripped before numeric parsing; any row that
// still fails to parse is a hard error with its line number.
std::vector<double> read_series_csv(const SeriesFile& file);
std::vector<double> read_series_csv(std::istream& in, const SeriesFile& file);

// One "i j" pair per line, i < j, lexicographic order, newline-terminated.
// An empty graph writes nothing.
void write_edge_list(const VisibilityGraph& g, std::ostream& out);

// One benchmark measurement.
struct TimingRecord {
    std::string algorithm;
    std::string series;
    std::size_t window = 0;
    int repeat = 1;
    std::string measure;  // "mean" or "total"
    double seconds = 0.0;
};

// Scientific notation with three significant digits, e.g. 1.02E-03.
std::string format_seconds(double seconds);

// Header "algorithm,series,window,repeat,measure,seconds" plus one row per
// record.
void write_timings_csv(const std::vector<TimingRecord>& records, std::ostream& out);

}  // namespace vgs
