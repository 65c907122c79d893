#ifndef QPFD_POLY_HPP
#define QPFD_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "qpfd/errors.hpp"

namespace qpfd {

// Dense univariate polynomial over a field K, stored as coefficients in
// ascending order with no trailing zeros (so the zero polynomial is empty).
//
// K must provide: default construction to 0, construction from long long,
// +, -, *, /, unary -, ==, is_zero(), is_one(), pow(long long) and
// canonical_text(). Rational and QRatFunc both qualify.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(long long c) : Poly(K(c)) {}
    Poly(K c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(1, K(1)); }

    static Poly monomial(int exp, K coeff) {
        Poly p;
        if (!coeff.is_zero()) {
            p.c_.resize(static_cast<std::size_t>(exp) + 1);
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<K>& coeffs() const { return c_; }

    const K& leading() const { return c_.back(); }  // pre: nonzero

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size())
                r[i] = a.c_[i];
            else
                r[i] = b.c_[i];
        }
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly r(*this);
        for (K& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const K& s) {
        if (s.is_zero()) return Poly();
        Poly r(a);
        for (K& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c_ == b.c_); }

    Poly pow(long long e) const {
        if (e < 0) throw DegreeTooLarge("negative polynomial power");
        Poly r(K(1));
        Poly base(*this);
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return r;
    }

    Poly derivative(int order = 1) const {
        Poly r(*this);
        for (int t = 0; t < order; ++t) {
            if (r.c_.empty()) return Poly();
            std::vector<K> d(r.c_.size() - 1);
            for (std::size_t i = 1; i < r.c_.size(); ++i)
                d[i - 1] = r.c_[i] * K(static_cast<long long>(i));
            r = Poly(std::move(d));
        }
        return r;
    }

    K eval(const K& v) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    // Quotient and remainder with deg(rem) < deg(b); throws on zero divisor.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        const int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<K> rem = a.c_;
        std::vector<K> quo(static_cast<std::size_t>(a.degree() - db) + 1);
        const K& lead = b.leading();
        for (int i = a.degree(); i >= db; --i) {
            if (rem[static_cast<std::size_t>(i)].is_zero()) continue;
            K q = rem[static_cast<std::size_t>(i)] / lead;
            const int shift = i - db;
            for (int j = 0; j <= db; ++j) {
                auto idx = static_cast<std::size_t>(shift + j);
                rem[idx] = rem[idx] - q * b.c_[static_cast<std::size_t>(j)];
            }
            quo[static_cast<std::size_t>(shift)] = std::move(q);
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    // p(c*x); composing with a scalar argument scale.
    Poly scale_arg(const K& s) const {
        Poly r(*this);
        K sp(1);
        for (std::size_t i = 1; i < r.c_.size(); ++i) {
            sp = sp * s;
            r.c_[i] = r.c_[i] * sp;
        }
        r.trim();
        return r;
    }

    // x^n * p(1/x) for n >= deg(p); coefficient i moves to position n-i.
    Poly reverse_to_x_power(int n) const {
        if (n < degree()) throw DegreeTooLarge("reversal power below polynomial degree");
        std::vector<K> r(static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(n) - i] = c_[i];
        return Poly(std::move(r));
    }

    std::string canonical_text(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const K& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            std::string t = term_text(c, i, var);
            if (out.empty()) {
                out = t;
            } else if (t.size() > 0 && t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static std::string term_text(const K& c, int i, const std::string& var) {
        std::string cs = c.canonical_text();
        if (i == 0) {
            // A constant term only needs parentheses when it is itself a sum.
            if (cs.find(' ') != std::string::npos) return "(" + cs + ")";
            return cs;
        }
        std::string xp = (i == 1) ? var : var + "^" + std::to_string(i);
        if (c.is_one()) return xp;
        if ((-c).is_one()) return "-" + xp;
        bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        if (wrap) cs = "(" + cs + ")";
        return cs + "*" + xp;
    }

    std::vector<K> c_;
};

}  // namespace qpfd

#endif  // QPFD_POLY_HPP
