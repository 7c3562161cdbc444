#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "menage/core.hpp"
#include "menage/output.hpp"

using namespace menage::output;
using menage::ExactInteger;

TEST_CASE("build_record carries exact decimal strings", "[output]") {
    OutputRecord r = build_record(10, false);
    CHECK(r.n == 10);
    CHECK(r.tait == "439792");
    CHECK(r.menage == "3191834419200");
    CHECK_FALSE(r.terms.has_value());
    CHECK(menage::parse_decimal(r.menage) == menage::menage_count(10));
}

TEST_CASE("build_record term decomposition matches the breakdown", "[output]") {
    OutputRecord r = build_record(3, true);
    REQUIRE(r.terms.has_value());
    REQUIRE(r.terms->size() == 4);
    CHECK((*r.terms)[0] == TermRecord{0, "1", 1, "6", "6"});
    CHECK((*r.terms)[1] == TermRecord{1, "6", -1, "2", "-12"});
    CHECK((*r.terms)[2] == TermRecord{2, "9", 1, "1", "9"});
    CHECK((*r.terms)[3] == TermRecord{3, "2", -1, "1", "-2"});
}

TEST_CASE("build_table covers the requested range and rejects bad ranges", "[output]") {
    std::vector<OutputRecord> rows = build_table(2, 6, false);
    REQUIRE(rows.size() == 5);
    CHECK(rows.front().n == 2);
    CHECK(rows.back().n == 6);
    CHECK_THROWS_AS(build_table(1, 5, false), std::domain_error);
    CHECK_THROWS_AS(build_table(5, 4, false), std::domain_error);
}

TEST_CASE("csv output is exact and parses back losslessly", "[output]") {
    std::vector<OutputRecord> rows = build_table(2, 5, false);
    std::string csv = render_csv(rows);
    CHECK(csv == "n,tait,menage\n2,0,0\n3,1,12\n4,2,96\n5,13,3120\n");

    // Every cell after the header round-trips through parse_decimal.
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        std::size_t c1 = line.find(','), c2 = line.rfind(',');
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 > c1);
        CHECK(line.substr(0, c1) == std::to_string(rows[row].n));
        CHECK(menage::parse_decimal(line.substr(c1 + 1, c2 - c1 - 1)) ==
              menage::tait_count(rows[row].n));
        CHECK(menage::parse_decimal(line.substr(c2 + 1)) == menage::menage_count(rows[row].n));
        ++row;
    }
    CHECK(row == rows.size());
}

TEST_CASE("json output round-trips through parse_json", "[output]") {
    std::vector<OutputRecord> rows = build_table(2, 7, true);
    std::string json = render_json(rows);
    CHECK(parse_json(json) == rows);
    CHECK(render_json(parse_json(json)) == json);
}

TEST_CASE("json field names are stable", "[output]") {
    std::string json = render_json(build_table(3, 3, true));
    for (const char* key : {"\"n\":", "\"tait\":", "\"menage\":", "\"terms\":", "\"r\":",
                            "\"domino_count\":", "\"sign\":", "\"tail_factorial\":", "\"term\":"}) {
        INFO(key);
        CHECK(json.find(key) != std::string::npos);
    }
}

TEST_CASE("json decimal strings parse back to the producing integers", "[output]") {
    for (const OutputRecord& r : parse_json(render_json(build_table(2, 20, true)))) {
        CHECK(menage::parse_decimal(r.tait) == menage::tait_count(r.n));
        CHECK(menage::parse_decimal(r.menage) == menage::menage_count(r.n));
        REQUIRE(r.terms.has_value());
        ExactInteger sum(0);
        for (const TermRecord& t : *r.terms) {
            CHECK(menage::parse_decimal(t.term) ==
                  ExactInteger(t.sign) * menage::parse_decimal(t.domino_count) *
                      menage::parse_decimal(t.tail_factorial));
            sum += menage::parse_decimal(t.term);
        }
        CHECK(sum == menage::tait_count(r.n));
    }
}

TEST_CASE("text output aligns columns and renders terms", "[output]") {
    std::string text = render_text(build_table(2, 4, false));
    CHECK(text == "n  tait  menage\n"
                  "2     0       0\n"
                  "3     1      12\n"
                  "4     2      96\n");
    std::string with_terms = render_text(build_table(3, 3, true));
    CHECK(with_terms.find("  r=1: -1 * dominos 6 * tail 2 = -12\n") != std::string::npos);
}

TEST_CASE("large values render as full decimals, never scientific", "[output]") {
    OutputRecord r = build_record(60, false);
    CHECK(r.menage.size() > 60);
    CHECK(r.menage.find_first_not_of("0123456789") == std::string::npos);
}
