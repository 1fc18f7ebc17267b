#include <doctest.h>

#include <stdexcept>

#include <rc/rational.hpp>

using rc::Rational;

TEST_CASE("parse_rational accepts integers and fractions")
{
    CHECK(rc::parse_rational("7") == 7);
    CHECK(rc::parse_rational("-1/2") == Rational(-1, 2));
    CHECK(rc::parse_rational("2/4") == Rational(1, 2));
    CHECK(rc::parse_rational("\xE2\x88\x92" "1/2") == Rational(-1, 2));
    CHECK(rc::parse_rational("0") == 0);
}

TEST_CASE("parse_rational rejects decimals and zero denominators")
{
    CHECK_THROWS_AS(rc::parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("canonical fractions are strict")
{
    CHECK(rc::parse_canonical_fraction("3/1") == 3);
    CHECK(rc::parse_canonical_fraction("-1/2") == Rational(-1, 2));
    CHECK_THROWS_AS(rc::parse_canonical_fraction("3/6"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_canonical_fraction("3"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_canonical_fraction("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_canonical_fraction("-0/1"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_canonical_fraction("01/2"), std::invalid_argument);
    CHECK_THROWS_AS(rc::parse_canonical_fraction("1/02"), std::invalid_argument);
}

TEST_CASE("to_fraction_string always prints a denominator")
{
    CHECK(rc::to_fraction_string(Rational(3)) == "3/1");
    CHECK(rc::to_fraction_string(Rational(-2, 4)) == "-1/2");
    CHECK(rc::make_rational(6, -4) == Rational(-3, 2));
    CHECK_THROWS_AS(rc::make_rational(1, 0), std::invalid_argument);
    CHECK(rc::to_fraction_string(Rational(0)) == "0/1");
}

TEST_CASE("rational_pow")
{
    CHECK(rc::rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rc::rational_pow(Rational(-5), 0) == 1);
}
