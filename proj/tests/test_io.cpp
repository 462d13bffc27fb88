#include <doctest.h>

#include <charconv>
#include <sstream>

#include "oracle.hpp"
#include "vgs/criteria.hpp"
#include "vgs/io.hpp"

using namespace vgs;

namespace {

std::vector<double> parse(const std::string& text, SeriesFile file = {}) {
    std::istringstream in(text);
    return read_series_csv(in, file);
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::vector<Edge> edges;
    std::istringstream in(text);
    TickIndex i, j;
    while (in >> i >> j) edges.emplace_back(i, j);
    return edges;
}

}  // namespace

TEST_CASE("csv ingestion, plain rows") {
    CHECK(parse("date,close\n2024-01-02,6.59\n2024-01-03,6.60\n") ==
          std::vector<double>{6.59, 6.60});

    SeriesFile newest;
    newest.newest_first = true;
    CHECK(parse("date,close\n2024-01-03,6.60\n2024-01-02,6.59\n", newest) ==
          std::vector<double>{6.59, 6.60});
}

TEST_CASE("csv ingestion, quoting and thousands separators") {
    CHECK(parse("date,close\nx,\"1,234.5\"\n") == std::vector<double>{1234.5});
    CHECK(parse("date,close\nx,\"2,345,678.25\"\n") == std::vector<double>{2345678.25});

    SeriesFile by_name;
    by_name.value_column = std::string("close");
    CHECK(parse("open,close,volume\n1.0,2.0,3\n4.0,5.0,6\n", by_name) ==
          std::vector<double>{2.0, 5.0});

    SeriesFile first_col;
    first_col.value_column = std::size_t{0};
    first_col.has_header = false;
    CHECK(parse("1.5\n2.5\n", first_col) == std::vector<double>{1.5, 2.5});
}

TEST_CASE("csv ingestion rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse("date,close\n"), EmptyInputError);
    CHECK_THROWS_AS(parse(""), EmptyInputError);

    try {
        parse("date,close\nx,1.0\ny,oops\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    CHECK_THROWS_AS(parse("date,close\nx,nan\n"), ParseError);
    CHECK_THROWS_AS(parse("date,close\nx,inf\n"), ParseError);
    CHECK_THROWS_AS(parse("date,close\nx\n"), ParseError);  // missing column
    CHECK_THROWS_AS(parse("date,close\nx,\"1.0\n"), ParseError);  // unterminated quote

    SeriesFile bad_name;
    bad_name.value_column = std::string("price");
    CHECK_THROWS_AS(parse("date,close\nx,1\n", bad_name), ParseError);

    SeriesFile nameless;
    nameless.value_column = std::string("close");
    nameless.has_header = false;
    CHECK_THROWS_AS(parse("x,1\n", nameless), ConfigError);
}

TEST_CASE("csv ingestion never yields non-finite values under fuzzing") {
    testutil::WindowSource src(808);
    auto& rng = src.rng();
    const std::vector<std::string> cells{"1.5",  "-2e3", "oops", "nan",     "inf",
                                         "",     "7,7",  "\"8\"", "anything", "9.25"};
    for (int round = 0; round < 300; ++round) {
        std::string text = "a,b\n";
        const int rows = 1 + static_cast<int>(rng.next() % 6);
        for (int r = 0; r < rows; ++r) {
            text += "x," + cells[rng.next() % cells.size()] + "\n";
        }
        try {
            for (double v : parse(text)) REQUIRE(std::isfinite(v));
        } catch (const Error&) {
            // rejected input is fine; silent NaN is not
        }
    }
}

TEST_CASE("edge list output is canonical") {
    std::ostringstream out;
    write_edge_list(basic_build(Window::over(std::vector<double>{1, 2, 4}), CriterionKind::Natural),
                    out);
    CHECK(out.str() == "0 1\n0 2\n1 2\n");

    std::ostringstream empty;
    write_edge_list(VisibilityGraph{}, empty);
    CHECK(empty.str().empty());

    VisibilityGraph g;
    g.add_node(5);
    g.add_node(7);
    g.add_edge(5, 7);
    std::ostringstream one;
    write_edge_list(g, one);
    CHECK(one.str() == "5 7\n");
}

TEST_CASE("edge list round-trips") {
    testutil::WindowSource src(15);
    for (int round = 0; round < 40; ++round) {
        const auto values = src.next(src.length_between(1, 80));
        const TickIndex first = src.rng().next() % 100;
        VisibilityGraph g = basic_build(Window::over(values, first), CriterionKind::Horizontal);
        std::ostringstream out;
        write_edge_list(g, out);
        REQUIRE(parse_edge_list(out.str()) == g.edges_sorted());
    }
}

TEST_CASE("timings csv format") {
    std::ostringstream out;
    write_timings_csv({{"LOT-NVG", "uniform", 2000, 1, "mean", 1.02e-3}}, out);
    CHECK(out.str() ==
          "algorithm,series,window,repeat,measure,seconds\n"
          "LOT-NVG,uniform,2000,1,mean,1.02E-03\n");

    std::ostringstream header_only;
    write_timings_csv({}, header_only);
    CHECK(header_only.str() == "algorithm,series,window,repeat,measure,seconds\n");

    CHECK(format_seconds(0.0) == "0.00E+00");
    CHECK(format_seconds(1.02e-3) == "1.02E-03");
    CHECK(format_seconds(1.0) == "1.00E+00");
}

TEST_CASE("fixture series files load cleanly") {
    for (const char* name :
         {"fx_close_sample.csv", "vol_index_sample.csv", "commodity_close_sample.csv"}) {
        SeriesFile file;
        file.path = std::string(VGS_DATA_DIR) + "/" + name;
        if (std::string(name).rfind("commodity", 0) == 0) file.newest_first = true;
        const auto values = read_series_csv(file);
        REQUIRE(values.size() >= 100);
        for (double v : values) REQUIRE(std::isfinite(v));
    }
}
