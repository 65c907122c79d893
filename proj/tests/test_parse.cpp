#include "doctest.h"
#include "qpfd/polyparse.hpp"

using qpfd::Poly;
using qpfd::QRatFunc;
using qpfd::Rational;

namespace {

Poly<QRatFunc> X() { return Poly<QRatFunc>::variable(); }

}  // namespace

TEST_CASE("parse basic polynomials") {
    CHECK(qpfd::parse_poly("0").is_zero());
    CHECK(qpfd::parse_poly("x") == X());
    CHECK(qpfd::parse_poly("q") == Poly<QRatFunc>(QRatFunc::q()));
    CHECK(qpfd::parse_poly("42") == Poly<QRatFunc>(QRatFunc(42)));

    auto p = qpfd::parse_poly("q*x^2 - (1+q)*x + 1");
    auto expect = X() * X() * QRatFunc::q() - X() * (QRatFunc(1) + QRatFunc::q()) +
                  Poly<QRatFunc>(QRatFunc(1));
    CHECK(p == expect);
}

TEST_CASE("parse precedence and signs") {
    // '*' binds tighter than '+'.
    CHECK(qpfd::parse_poly("1 + 2*x") == X() * QRatFunc(2) + Poly<QRatFunc>(QRatFunc(1)));
    // '^' binds tighter than '*'.
    CHECK(qpfd::parse_poly("2*x^3") == X().pow(3) * QRatFunc(2));
    // Unary signs fold.
    CHECK(qpfd::parse_poly("--x") == X());
    CHECK(qpfd::parse_poly("-+-x") == X());
    CHECK(qpfd::parse_poly("-x^2") == -(X() * X()));
    CHECK(qpfd::parse_poly("(-x)^2") == X() * X());
    CHECK(qpfd::parse_poly("x - - 1") == X() + Poly<QRatFunc>(QRatFunc(1)));
    // Whitespace is free.
    CHECK(qpfd::parse_poly(" ( x + 1 ) * ( x - 1 ) ") == X() * X() - Poly<QRatFunc>(QRatFunc(1)));
}

TEST_CASE("parse division by x-free values") {
    CHECK(qpfd::parse_poly("x/2") == X() * QRatFunc(Rational(1, 2)));
    CHECK(qpfd::parse_poly("x/q") == Poly<QRatFunc>::monomial(1, QRatFunc::qpow(-1)));
    CHECK(qpfd::parse_poly("x/(1+q)") ==
          Poly<QRatFunc>::monomial(1, (QRatFunc(1) + QRatFunc::q()).inv()));
    CHECK_THROWS_AS(qpfd::parse_poly("1/x"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("1/(x+1)"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("1/0"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("1/(q-q)"), qpfd::ParseError);
}

TEST_CASE("parse exponents") {
    CHECK(qpfd::parse_poly("x^0") == Poly<QRatFunc>(QRatFunc(1)));
    CHECK(qpfd::parse_poly("q^-2") == Poly<QRatFunc>(QRatFunc::qpow(-2)));
    CHECK(qpfd::parse_poly("(1+q)^2") ==
          Poly<QRatFunc>((QRatFunc(1) + QRatFunc::q()).pow(2)));
    CHECK_THROWS_AS(qpfd::parse_poly("x^-1"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("0^-1"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("x^20000"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("x^9999999999"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("x^"), qpfd::ParseError);
    CHECK_THROWS_AS(qpfd::parse_poly("x^q"), qpfd::ParseError);
}

TEST_CASE("parse errors carry a position") {
    auto check_pos = [](const std::string& text, const std::string& fragment) {
        try {
            qpfd::parse_poly(text);
            FAIL("expected ParseError for: " << text);
        } catch (const qpfd::ParseError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    };
    check_pos("x + ", "unexpected end of input");
    check_pos("x + y", "unexpected character 'y'");
    check_pos("(x + 1", "expected ')'");
    check_pos("x 1", "trailing input");
    check_pos("", "unexpected end of input");
}

TEST_CASE("parse large coefficients exactly") {
    auto p = qpfd::parse_poly("123456789012345678901234567890*x");
    CHECK(p.coeff(1) == QRatFunc(Rational::parse("123456789012345678901234567890")));
}
