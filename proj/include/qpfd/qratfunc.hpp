#ifndef QPFD_QRATFUNC_HPP
#define QPFD_QRATFUNC_HPP

#include <string>
#include <utility>

#include "qpfd/poly.hpp"
#include "qpfd/rational.hpp"

namespace qpfd {

// Monic gcd of two polynomials over Q, computed with a content-normalized
// primitive pseudo-remainder sequence over Z to keep coefficients small.
// gcd(0, 0) == 0; otherwise the result is monic.
Poly<Rational> poly_gcd(const Poly<Rational>& a, const Poly<Rational>& b);

// Element of Q(q): a quotient of polynomials in q over Q, kept canonical:
// gcd(num, den) == 1, den monic, and zero is 0/1. Equality is structural.
class QRatFunc {
  public:
    QRatFunc() : num_(), den_(Rational(1)) {}
    QRatFunc(long long c) : num_(Rational(c)), den_(Rational(1)) {}
    QRatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    explicit QRatFunc(Poly<Rational> num) : num_(std::move(num)), den_(Rational(1)) {}
    QRatFunc(Poly<Rational> num, Poly<Rational> den);

    // The indeterminate q itself, and signed powers of it.
    static QRatFunc q() { return qpow(1); }
    static QRatFunc qpow(long long e);

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    QRatFunc inv() const;
    QRatFunc pow(long long e) const;

    // Value at an exact rational q; throws PoleAtSample on a denominator zero.
    Rational eval_at(const Rational& v) const;

    // The image under q -> 1/q, renormalized to canonical form.
    QRatFunc subst_q_inverse() const;

    std::string canonical_text() const;

    friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b);
    friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b);
    friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b);
    friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b);
    QRatFunc operator-() const;

    QRatFunc& operator+=(const QRatFunc& b) { return *this = *this + b; }
    QRatFunc& operator-=(const QRatFunc& b) { return *this = *this - b; }
    QRatFunc& operator*=(const QRatFunc& b) { return *this = *this * b; }
    QRatFunc& operator/=(const QRatFunc& b) { return *this = *this / b; }

    friend bool operator==(const QRatFunc& a, const QRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRatFunc& a, const QRatFunc& b) { return !(a == b); }

  private:
    struct Canonical {};  // tag: parts are already reduced, den monic
    QRatFunc(Poly<Rational> num, Poly<Rational> den, Canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    static QRatFunc make_canonical(Poly<Rational> num, Poly<Rational> den);

    Poly<Rational> num_;
    Poly<Rational> den_;
};

}  // namespace qpfd

#endif  // QPFD_QRATFUNC_HPP
