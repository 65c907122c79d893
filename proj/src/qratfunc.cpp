#include "qpfd/qratfunc.hpp"

#include <algorithm>
#include <vector>

namespace qpfd {

namespace {

using QPoly = Poly<Rational>;
using ZVec = std::vector<mpz_class>;  // ascending coefficients, trailing nonzero

int val_of(const QPoly& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;
}

bool is_monomial(const QPoly& p) {
    return !p.is_zero() && val_of(p) == p.degree();
}

QPoly shift_down(const QPoly& p, int k) {
    std::vector<Rational> c(p.coeffs().begin() + k, p.coeffs().end());
    return QPoly(std::move(c));
}

QPoly make_monic(const QPoly& p) {
    if (p.is_zero() || p.leading().is_one()) return p;
    return p * p.leading().inv();
}

void z_trim(ZVec& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

void z_make_primitive(ZVec& v) {
    mpz_class content(0);
    for (const mpz_class& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1)
        for (mpz_class& x : v) x /= content;
}

// Scale away denominators and divide out integer content; sign of the
// leading coefficient is irrelevant for gcd purposes.
ZVec primitive_z(const QPoly& p) {
    mpz_class lcm_den(1);
    for (const Rational& c : p.coeffs()) {
        mpz_class d = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    ZVec v(p.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Rational& c = p.coeffs()[i];
        v[i] = c.num() * (lcm_den / c.den());
    }
    z_make_primitive(v);
    return v;
}

// Pseudo-remainder: repeatedly cancels the top coefficient after scaling by
// the divisor's leading coefficient, staying inside Z.
ZVec z_prem(ZVec r, const ZVec& b) {
    const mpz_class& lb = b.back();
    while (r.size() >= b.size()) {
        mpz_class lr = r.back();
        std::size_t shift = r.size() - b.size();
        for (mpz_class& x : r) x *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
        z_trim(r);
        if (r.empty()) break;
    }
    return r;
}

QPoly z_to_qpoly(const ZVec& v) {
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return QPoly(std::move(c));
}

// Exact quotient; the remainder must vanish by construction.
QPoly exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division in canonicalization");
    return q;
}

}  // namespace

Poly<Rational> poly_gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.degree() == 0 || b.degree() == 0) return QPoly(Rational(1));

    // Common power of q splits off exactly.
    int va = val_of(a), vb = val_of(b);
    int v = std::min(va, vb);
    if (is_monomial(a) || is_monomial(b))
        return QPoly::monomial(is_monomial(a) ? std::min(a.degree(), vb)
                                              : std::min(va, b.degree()),
                               Rational(1));
    QPoly pa = va > 0 ? shift_down(a, va) : a;
    QPoly pb = vb > 0 ? shift_down(b, vb) : b;

    ZVec za = primitive_z(pa);
    ZVec zb = primitive_z(pb);
    if (za.size() < zb.size()) std::swap(za, zb);
    while (!zb.empty()) {
        ZVec zr = z_prem(za, zb);
        z_make_primitive(zr);
        za = std::move(zb);
        zb = std::move(zr);
    }
    QPoly g = make_monic(z_to_qpoly(za));
    if (v > 0) g = g * QPoly::monomial(v, Rational(1));
    return g;
}

QRatFunc QRatFunc::make_canonical(Poly<Rational> num, Poly<Rational> den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return QRatFunc(QPoly(), QPoly(Rational(1)), Canonical{});
    if (!den.is_one()) {
        QPoly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        if (!den.leading().is_one()) {
            Rational s = den.leading().inv();
            num = num * s;
            den = den * s;
        }
    }
    return QRatFunc(std::move(num), std::move(den), Canonical{});
}

QRatFunc::QRatFunc(Poly<Rational> num, Poly<Rational> den) {
    *this = make_canonical(std::move(num), std::move(den));
}

QRatFunc QRatFunc::qpow(long long e) {
    if (e >= 0) return QRatFunc(QPoly::monomial(static_cast<int>(e), Rational(1)),
                                QPoly(Rational(1)), Canonical{});
    return QRatFunc(QPoly(Rational(1)), QPoly::monomial(static_cast<int>(-e), Rational(1)),
                    Canonical{});
}

QRatFunc QRatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    QPoly n = den_, d = num_;
    Rational s = d.leading().inv();
    return QRatFunc(n * s, d * s, Canonical{});
}

QRatFunc QRatFunc::pow(long long e) const {
    if (e == 0) return QRatFunc(1);
    QRatFunc base = e < 0 ? inv() : *this;
    unsigned long long ue = static_cast<unsigned long long>(e < 0 ? -e : e);
    QRatFunc r(1);
    while (ue > 0) {
        if (ue & 1) r = r * base;
        ue >>= 1;
        if (ue > 0) base = base * base;
    }
    return r;
}

Rational QRatFunc::eval_at(const Rational& v) const {
    Rational d = den_.eval(v);
    if (d.is_zero()) throw PoleAtSample("denominator vanishes at q = " + v.canonical_text());
    return num_.eval(v) / d;
}

QRatFunc QRatFunc::subst_q_inverse() const {
    if (is_zero()) return QRatFunc();
    int d = std::max(num_.degree(), den_.degree());
    return QRatFunc(num_.reverse_to_x_power(d), den_.reverse_to_x_power(d));
}

QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return QRatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return QRatFunc::make_canonical(a.num_ + b.num_, a.den_);
    // Knuth-style gcd split: with A = g*A', B = g*B' coprime, the sum is
    // t / (g*A'*B') with t = a.num*B' + b.num*A', and gcd(t, A'B') == 1,
    // so only the factor g can cancel.
    QPoly g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) {
        return QRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                        QRatFunc::Canonical{});
    }
    QPoly ap = a.den_ / g;
    QPoly bp = b.den_ / g;
    QPoly t = a.num_ * bp + b.num_ * ap;
    if (t.is_zero()) return QRatFunc();
    QPoly g2 = poly_gcd(t, g);
    if (!g2.is_one()) {
        t = t / g2;
        g = g / g2;
    }
    return QRatFunc(std::move(t), g * ap * bp, QRatFunc::Canonical{});
}

QRatFunc operator-(const QRatFunc& a, const QRatFunc& b) { return a + (-b); }

QRatFunc QRatFunc::operator-() const { return QRatFunc(-num_, den_, Canonical{}); }

QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
    if (a.is_zero() || b.is_zero()) return QRatFunc();
    if (a.den_.is_one() && b.den_.is_one()) return QRatFunc(a.num_ * b.num_);
    // Cross-reduce before multiplying so the product is already canonical.
    QPoly d1 = poly_gcd(a.num_, b.den_);
    QPoly d2 = poly_gcd(b.num_, a.den_);
    QPoly n1 = d1.is_one() ? a.num_ : a.num_ / d1;
    QPoly n2 = d2.is_one() ? b.num_ : b.num_ / d2;
    QPoly e1 = d2.is_one() ? a.den_ : a.den_ / d2;
    QPoly e2 = d1.is_one() ? b.den_ : b.den_ / d1;
    return QRatFunc(n1 * n2, e1 * e2, QRatFunc::Canonical{});
}

QRatFunc operator/(const QRatFunc& a, const QRatFunc& b) { return a * b.inv(); }

std::string QRatFunc::canonical_text() const {
    if (is_zero()) return "0";
    std::string n = num_.canonical_text("q");
    if (den_.is_one()) return n;
    std::string d = den_.canonical_text("q");
    if (n.find(' ') != std::string::npos || n.find('/') != std::string::npos) n = "(" + n + ")";
    if (d.find(' ') != std::string::npos || d.find('/') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace qpfd
