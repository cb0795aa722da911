#include <catch_amalgamated.hpp>

#include <random>

#include "twocolor/rational.hpp"

using twocolor::Rational;
using twocolor::rational;

TEST_CASE("construction reduces to canonical form") {
    CHECK(rational(2, 18) == rational(1, 9));
    CHECK(rational(0, 5) == Rational(0));
    CHECK(rational(0, 5).str() == "0");
    CHECK(rational(-3, -6) == rational(1, 2));
    CHECK(rational(3, -6) == rational(-1, 2));
    CHECK(rational(3, -6).denominator() == 2);
}

TEST_CASE("zero denominator rejected") {
    CHECK_THROWS_WITH(rational(1, 0), "zero denominator");
    CHECK_THROWS_AS(rational(1, 2) / Rational(0), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
    CHECK(rational(1, 3) + rational(1, 6) == rational(1, 2));
    CHECK(rational(1, 9) + rational(2, 9) == rational(1, 3));
    CHECK(rational(1, 2) - rational(1, 2) == Rational(0));
    CHECK(rational(2, 3) * rational(3, 4) == rational(1, 2));
    CHECK(rational(1, 3) / rational(2, 3) == rational(1, 2));
    // (a/b + c/d) equals canonical (ad+cb)/(bd)
    CHECK(rational(7, 12) + rational(5, 18) == rational(7 * 18 + 5 * 12, 216));
}

TEST_CASE("ordering") {
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(-1, 2) < Rational(0));
    CHECK(rational(2, 4) <= rational(1, 2));
}

TEST_CASE("parse/format round trip") {
    CHECK(Rational::parse("1/9") == rational(1, 9));
    CHECK(Rational::parse("-3/6") == rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("7").str() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational r = rational(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}
