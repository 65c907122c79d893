#include "qpfd/rational.hpp"

#include <cctype>
#include <ostream>

namespace qpfd {

Rational::Rational(long long num, long long den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // Strict shape check before handing off to GMP: [-]digits[/digits].
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t after_num = digits(i);
    if (after_num == i) throw ParseError("invalid rational: '" + text + "'");
    i = after_num;
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("invalid rational: '" + text + "'");
        std::size_t after_den = digits(i + 1);
        if (after_den == i + 1 || after_den != text.size())
            throw ParseError("invalid rational: '" + text + "'");
        mpz_class den(text.substr(i + 1));
        if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator: '" + text + "'");
        return Rational(mpz_class(text.substr(0, i)), den);
    }
    return Rational(mpz_class(text));
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DivisionByZero("zero to a negative power");
        return Rational(0);
    }
    mpz_class n = v_.get_num(), d = v_.get_den();
    if (e < 0) std::swap(n, d);
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), n.get_mpz_t(), ue);
    mpz_pow_ui(pd.get_mpz_t(), d.get_mpz_t(), ue);
    return Rational(pn, pd);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::canonical_text() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.canonical_text(); }

}  // namespace qpfd
