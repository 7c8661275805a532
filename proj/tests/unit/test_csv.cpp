#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "techrank/csv.hpp"
#include "techrank/error.hpp"

namespace {

namespace csv = techrank::csv;

TEST(Csv, QuotesNewlinesCrlfAndBom) {
    std::istringstream in("\xEF\xBB\xBFid,text\r\n1,\"a, \"\"b\"\"\"\r\n2,\"two\nlines\"\r\n\r\n3,plain\n");
    const auto t = csv::read_table(in);
    EXPECT_EQ(t.header, (std::vector<std::string>{"id", "text"}));
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.rows[0][1], "a, \"b\"");
    EXPECT_EQ(t.rows[1][1], "two\nlines");
    EXPECT_EQ(t.rows[2][1], "plain");
    EXPECT_EQ(t.row_lines[2], 6u);
}

TEST(Csv, HeaderErrors) {
    std::istringstream empty("");
    EXPECT_THROW(csv::read_table(empty), techrank::ParseError);
    std::istringstream dup("a,a\n1,2\n");
    EXPECT_THROW(csv::read_table(dup), techrank::ParseError);
    std::istringstream blank("a,,b\n");
    EXPECT_THROW(csv::read_table(blank), techrank::ParseError);
    std::istringstream open_quote("a\n\"never closed\n");
    EXPECT_THROW(csv::read_table(open_quote), techrank::ParseError);
}

TEST(Csv, WriteReadRoundTrip) {
    const std::vector<std::string> fields{"plain", "with,comma", "with \"quote\"", "multi\nline", ""};
    std::stringstream ss;
    csv::write_row(ss, {"a", "b", "c", "d", "e"});
    csv::write_row(ss, fields);
    const auto t = csv::read_table(ss);
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0], fields);
}

TEST(Csv, ParseDoubleIsStrict) {
    EXPECT_EQ(csv::parse_double("-3.5e2"), -350.0);
    EXPECT_EQ(csv::parse_double("+2"), 2.0);
    EXPECT_FALSE(csv::parse_double(" 7 "));
    EXPECT_FALSE(csv::parse_double("1,000"));
    EXPECT_FALSE(csv::parse_double("1 000"));
    EXPECT_FALSE(csv::parse_double("nan"));
    EXPECT_FALSE(csv::parse_double("inf"));
    EXPECT_FALSE(csv::parse_double(""));
    EXPECT_FALSE(csv::parse_double("12abc"));
}

TEST(Csv, FormatDoubleRoundTrips) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) / 7.0;
        EXPECT_EQ(csv::parse_double(csv::format_double(v)), v);
    }
    EXPECT_EQ(csv::format_double(0.5), "0.5");
    EXPECT_EQ(csv::format_double(1.0), "1");
}

}  // namespace
