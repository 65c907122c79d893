#ifndef QPFD_RATFUNC_HPP
#define QPFD_RATFUNC_HPP

#include <utility>

#include "qpfd/poly.hpp"

namespace qpfd {

// Quotient of polynomials in x over a field K, kept unreduced: equality is
// decided by cross-multiplication, so no gcd over K is ever needed. Callers
// control denominator growth by building sums over shared denominators.
template <class K>
struct RatFunc {
    Poly<K> num;
    Poly<K> den;

    RatFunc() : num(), den(K(1)) {}
    RatFunc(K c) : num(std::move(c)), den(K(1)) {}
    explicit RatFunc(Poly<K> n) : num(std::move(n)), den(K(1)) {}
    RatFunc(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    }

    bool is_zero() const { return num.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    RatFunc operator-() const { return RatFunc(-num, den); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }

    friend RatFunc operator*(const RatFunc& a, const K& s) { return RatFunc(a.num * s, a.den); }
    friend RatFunc operator*(const K& s, const RatFunc& a) { return a * s; }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    // Equality as rational functions (cross-multiplication).
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // The cross-difference a.num*b.den - b.num*a.den; zero iff a == b.
    friend Poly<K> cross_difference(const RatFunc& a, const RatFunc& b) {
        return a.num * b.den - b.num * a.den;
    }
};

}  // namespace qpfd

#endif  // QPFD_RATFUNC_HPP
