#include "qpfd/polyparse.hpp"

#include <cctype>

#include "qpfd/errors.hpp"

namespace qpfd {

namespace {

using P = Poly<QRatFunc>;

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(i));
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    P expr() {
        P v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    P term() {
        P v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                P d = factor();
                if (d.degree() > 0) fail("division by a value involving x");
                if (d.is_zero()) fail("division by zero");
                v = v * P(d.coeff(0).inv());
            } else {
                return v;
            }
        }
    }

    P factor() {
        bool neg = false;
        for (;;) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        P v = atom();
        if (eat('^')) {
            bool eneg = eat('-');
            long long e = integer_literal();
            if (e > 10000) fail("exponent too large");
            if (eneg) {
                if (v.degree() > 0) fail("negative power of a value involving x");
                if (v.is_zero()) fail("negative power of zero");
                v = P(v.coeff(0).pow(-e));
            } else {
                v = v.pow(e);
            }
        }
        return neg ? -v : v;
    }

    P atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            P v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x') {
            ++i;
            return P::variable();
        }
        if (c == 'q') {
            ++i;
            return P(QRatFunc::q());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return P(QRatFunc{Rational::parse(s.substr(start, i - start))});
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long long integer_literal() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        std::string digits = s.substr(start, i - start);
        if (digits.size() > 9) fail("exponent too large");
        return std::stoll(digits);
    }
};

}  // namespace

Poly<QRatFunc> parse_poly(const std::string& text) {
    Parser p{text};
    P v = p.expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace qpfd
