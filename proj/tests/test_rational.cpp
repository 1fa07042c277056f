#include "doctest.h"
#include "pqpolys/rational.hpp"

using namespace pqpolys;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(0, 7).is_zero());
    CHECK(Rational(-4, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a < Rational(1, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("integer powers, including negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("string form and parsing round-trip") {
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("x"), std::domain_error);
}
