#include <catch2/catch_amalgamated.hpp>

#include "menage/core.hpp"

using menage::ExactInteger;

namespace {

ExactInteger big(const char* decimal) { return menage::parse_decimal(decimal); }

} // namespace

TEST_CASE("factorial small values", "[core]") {
    CHECK(menage::factorial(0) == 1);
    CHECK(menage::factorial(1) == 1);
    CHECK(menage::factorial(5) == 120);
    CHECK(menage::factorial(20) == big("2432902008176640000"));
    CHECK(menage::factorial(25) == big("15511210043330985984000000"));
}

TEST_CASE("binomial exact values and edges", "[core]") {
    CHECK(menage::binomial(0, 0) == 1);
    CHECK(menage::binomial(10, 0) == 1);
    CHECK(menage::binomial(10, 10) == 1);
    CHECK(menage::binomial(10, 3) == 120);
    CHECK(menage::binomial(52, 5) == 2598960);
    CHECK(menage::binomial(100, 50) == big("100891344545564193334812497256"));
    CHECK(menage::binomial(5, -1) == 0);
    CHECK(menage::binomial(5, 6) == 0);
}

TEST_CASE("binomial satisfies the Pascal recurrence", "[core]") {
    for (unsigned long a = 1; a <= 40; ++a) {
        for (long b = 1; b <= static_cast<long>(a); ++b) {
            CHECK(menage::binomial(a, b) ==
                  menage::binomial(a - 1, b - 1) + menage::binomial(a - 1, b));
        }
    }
}

TEST_CASE("domino_count fixtures", "[core]") {
    CHECK(menage::domino_count(16, 3) == 352); // 16-cycle, 3 dominos
    CHECK(menage::domino_count(6, 1) == 6);
    CHECK(menage::domino_count(8, 4) == 2);
    CHECK(menage::domino_count(4, 2) == 2);
    CHECK(menage::domino_count(5, 2) == 5);
}

TEST_CASE("domino_count boundaries", "[core]") {
    for (unsigned long m = 3; m <= 30; ++m) {
        CHECK(menage::domino_count(m, 0) == 1);
        CHECK(menage::domino_count(m, 1) == static_cast<long>(m));
        CHECK(menage::domino_count(m, m / 2 + 1) == 0); // cannot fit
        if (m % 2 == 0) {
            CHECK(menage::domino_count(m, m / 2) == 2); // perfect matchings of a cycle
        }
    }
}

TEST_CASE("domino_count rejects degenerate cycles", "[core]") {
    CHECK_THROWS_AS(menage::domino_count(0, 0), std::domain_error);
    CHECK_THROWS_AS(menage::domino_count(2, 1), std::domain_error);
    CHECK_THROWS_AS(menage::domino_count_alt(2, 1), std::domain_error);
    CHECK_THROWS_AS(menage::domino_count_alt(6, 0), std::domain_error);
    CHECK_THROWS_AS(menage::domino_count_alt(6, 4), std::domain_error);
}

TEST_CASE("domino_count agrees with the stars-and-bars form", "[core]") {
    for (unsigned long m = 3; m <= 64; ++m) {
        for (unsigned long r = 1; 2 * r <= m; ++r) {
            CHECK(menage::domino_count(m, r) == menage::domino_count_alt(m, r));
        }
    }
}

TEST_CASE("touchard_term fixtures and signs", "[core]") {
    CHECK(menage::touchard_term(2, 0) == 2);  // d_0=1, 2! = 2
    CHECK(menage::touchard_term(2, 1) == -4); // d_1(4)=4, 1! = 1
    CHECK(menage::touchard_term(2, 2) == 2);  // d_2(4)=2, 0! = 1
    CHECK(menage::touchard_term(3, 3) == -2);
    CHECK_THROWS_AS(menage::touchard_term(1, 0), std::domain_error);
    CHECK_THROWS_AS(menage::touchard_term(3, 4), std::domain_error);
}

TEST_CASE("tait_count frozen values", "[core]") {
    const long expected[] = {0, 1, 2, 13, 80, 579, 4738, 43387}; // n = 2..9
    for (unsigned long n = 2; n <= 9; ++n) {
        CHECK(menage::tait_count(n) == expected[n - 2]);
    }
    CHECK(menage::tait_count(10) == 439792);
    CHECK(menage::tait_count(20) == big("312400218671253762"));
    CHECK_THROWS_AS(menage::tait_count(1), std::domain_error);
}

TEST_CASE("tait_breakdown reconstructs its total", "[core]") {
    for (unsigned long n = 2; n <= 30; ++n) {
        menage::TouchardBreakdown<ExactInteger> b = menage::tait_breakdown(n);
        REQUIRE(b.n == n);
        REQUIRE(b.terms.size() == n + 1);
        ExactInteger sum(0);
        for (unsigned long r = 0; r <= n; ++r) {
            const auto& t = b.terms[r];
            CHECK(t.r == r);
            CHECK(t.sign == (r % 2 == 0 ? 1 : -1));
            CHECK(t.domino_count == menage::domino_count(2 * n, r));
            CHECK(t.tail_factorial == menage::factorial(n - r));
            CHECK(t.term_value == ExactInteger(t.sign) * t.domino_count * t.tail_factorial);
            sum += t.term_value;
        }
        CHECK(sum == b.total);
        CHECK(b.total == menage::tait_count(n));
    }
}

TEST_CASE("tait_breakdown n=3 exact decomposition", "[core]") {
    menage::TouchardBreakdown<ExactInteger> b = menage::tait_breakdown(3);
    REQUIRE(b.terms.size() == 4);
    CHECK(b.terms[0].domino_count == 1);
    CHECK(b.terms[0].term_value == 6);
    CHECK(b.terms[1].domino_count == 6);
    CHECK(b.terms[1].term_value == -12);
    CHECK(b.terms[2].domino_count == 9);
    CHECK(b.terms[2].term_value == 9);
    CHECK(b.terms[3].domino_count == 2);
    CHECK(b.terms[3].term_value == -2);
    CHECK(b.total == 1);
}

TEST_CASE("incremental evaluation equals the direct sum", "[core]") {
    for (unsigned long n = 2; n <= 150; ++n) {
        CHECK(menage::tait_count_incremental(n) == menage::tait_count(n));
    }
    CHECK_THROWS_AS(menage::tait_count_incremental(0), std::domain_error);
}

TEST_CASE("menage_count frozen values", "[core]") {
    CHECK(menage::menage_count(2) == 0);
    CHECK(menage::menage_count(3) == 12);
    CHECK(menage::menage_count(4) == 96);
    CHECK(menage::menage_count(5) == 3120);
    CHECK(menage::menage_count(10) == big("3191834419200"));
    CHECK_THROWS_AS(menage::menage_count(1), std::domain_error);
}

TEST_CASE("exact_div accepts exact quotients and rejects remainders", "[core]") {
    CHECK(menage::exact_div(ExactInteger(84), ExactInteger(7)) == 12);
    CHECK(menage::exact_div(ExactInteger(-84), ExactInteger(7)) == -12);
    CHECK_THROWS_AS(menage::exact_div(ExactInteger(85), ExactInteger(7)), std::logic_error);
}

TEST_CASE("decimal strings round-trip", "[core]") {
    for (unsigned long n : {2UL, 7UL, 25UL, 60UL}) {
        ExactInteger v = menage::menage_count(n);
        CHECK(menage::parse_decimal(menage::to_decimal(v)) == v);
    }
    CHECK(menage::to_decimal(ExactInteger(0)) == "0");
    CHECK(menage::to_decimal(ExactInteger(-5)) == "-5");
    CHECK(menage::parse_decimal("-5") == -5);
    CHECK_THROWS_AS(menage::parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(menage::parse_decimal("12 "), std::invalid_argument);
    CHECK_THROWS_AS(menage::parse_decimal("+12"), std::invalid_argument);
    CHECK_THROWS_AS(menage::parse_decimal("1e5"), std::invalid_argument);
}
