#include "doctest.h"
#include "qpfd/rational.hpp"

#include <sstream>

using qpfd::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6) == Rational(2, -3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7) == Rational());
    // Denominator is always positive.
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(1, -2).num() == -1);
    CHECK_THROWS_AS(Rational(1, 0), qpfd::DivisionByZero);
}

TEST_CASE("rational predicates and sign") {
    CHECK(Rational().is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(2, 2).is_one());
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 2).is_integer());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(3, 7).sign() == 1);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK_THROWS_AS(a / Rational(0), qpfd::DivisionByZero);

    Rational c = a;
    c += b;
    c -= b;
    c *= b;
    c /= b;
    CHECK(c == a);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(Rational(3) >= Rational(3));
}

TEST_CASE("rational inv and pow") {
    CHECK(Rational(3, 4).inv() == Rational(4, 3));
    CHECK(Rational(-3, 4).inv() == Rational(-4, 3));
    CHECK_THROWS_AS(Rational(0).inv(), qpfd::DivisionByZero);

    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(0).pow(3) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), qpfd::DivisionByZero);
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(-2).pow(2) == Rational(4));
}

TEST_CASE("rational parse accepts p and p/r") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    // Arbitrary precision survives the round trip.
    std::string big = "123456789012345678901234567890";
    CHECK(Rational::parse(big).canonical_text() == big);
}

TEST_CASE("rational parse rejects malformed text") {
    CHECK_THROWS_AS(Rational::parse(""), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), qpfd::DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1.5"), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("1 "), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), qpfd::ParseError);
    CHECK_THROWS_AS(Rational::parse("+7/2"), qpfd::ParseError);
}

TEST_CASE("rational canonical text") {
    CHECK(Rational(7).canonical_text() == "7");
    CHECK(Rational(-7).canonical_text() == "-7");
    CHECK(Rational(1, 2).canonical_text() == "1/2");
    CHECK(Rational(-1, 2).canonical_text() == "-1/2");
    CHECK(Rational(0).canonical_text() == "0");

    std::ostringstream os;
    os << Rational(-5, 9);
    CHECK(os.str() == "-5/9");
}
