#include "doctest.h"
#include "qpfd/qratfunc.hpp"

#include <random>
#include <vector>

using qpfd::Poly;
using qpfd::QRatFunc;
using qpfd::Rational;

namespace {

Poly<Rational> rand_qpoly(std::mt19937_64& rng, int max_deg) {
    int deg = static_cast<int>(rng() % static_cast<unsigned long long>(max_deg + 2)) - 1;
    if (deg < 0) return Poly<Rational>();
    std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : cs) c = Rational(static_cast<long long>(rng() % 11) - 5);
    if (cs.back().is_zero()) cs.back() = Rational(1);
    return Poly<Rational>(std::move(cs));
}

QRatFunc rand_qrf(std::mt19937_64& rng) {
    Poly<Rational> den;
    while (den.is_zero()) den = rand_qpoly(rng, 3);
    return QRatFunc(rand_qpoly(rng, 3), den);
}

}  // namespace

TEST_CASE("poly_gcd over Q") {
    auto x = Poly<Rational>::variable();
    auto a = (x - Poly<Rational>(1)) * (x - Poly<Rational>(2));
    auto b = (x - Poly<Rational>(1)) * (x - Poly<Rational>(3));
    CHECK(poly_gcd(a, b) == x - Poly<Rational>(1));
    // Result is monic even when inputs are scaled.
    CHECK(poly_gcd(a * Rational(6), b * Rational(-10, 3)) == x - Poly<Rational>(1));
    CHECK(poly_gcd(a, Poly<Rational>()) == a);
    CHECK(poly_gcd(Poly<Rational>(), Poly<Rational>()).is_zero());
    CHECK(poly_gcd(a, Poly<Rational>(5)) == Poly<Rational>(1));
}

TEST_CASE("qratfunc canonicalization") {
    auto q = Poly<Rational>::variable();
    // (q^2 - 1)/(q - 1) reduces to q + 1 over den 1.
    QRatFunc r(q * q - Poly<Rational>(1), q - Poly<Rational>(1));
    CHECK(r.is_polynomial());
    CHECK(r.num() == q + Poly<Rational>(1));

    // Denominator comes out monic: 1/(2q - 2) = (1/2)/(q - 1).
    QRatFunc s(Poly<Rational>(1), q * Rational(2) - Poly<Rational>(2));
    CHECK(s.den() == q - Poly<Rational>(1));
    CHECK(s.num() == Poly<Rational>(Rational(1, 2)));

    // Zero is exactly 0/1 regardless of the input denominator.
    QRatFunc z(Poly<Rational>(), q * q + Poly<Rational>(7));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());

    CHECK_THROWS_AS(QRatFunc(Poly<Rational>(1), Poly<Rational>()), qpfd::DivisionByZero);
}

TEST_CASE("qratfunc canonical text") {
    QRatFunc q = QRatFunc::q();
    CHECK((QRatFunc(1) / (q - QRatFunc(1))).canonical_text() == "1/(q - 1)");
    CHECK((QRatFunc(-1) / (q - QRatFunc(1))).canonical_text() == "-1/(q - 1)");
    CHECK(((q + QRatFunc(1)) / q).canonical_text() == "(q + 1)/q");
    CHECK(QRatFunc(0).canonical_text() == "0");
    CHECK(QRatFunc(Rational(3, 2)).canonical_text() == "3/2");
    CHECK(QRatFunc::qpow(3).canonical_text() == "q^3");
    CHECK(QRatFunc::qpow(-2).canonical_text() == "1/q^2");
}

TEST_CASE("qratfunc qpow") {
    QRatFunc q = QRatFunc::q();
    CHECK(QRatFunc::qpow(0).is_one());
    CHECK(QRatFunc::qpow(1) == q);
    CHECK(QRatFunc::qpow(5) == q * q * q * q * q);
    CHECK(QRatFunc::qpow(-3) * QRatFunc::qpow(3) == QRatFunc(1));
    CHECK(QRatFunc::qpow(-1) == q.inv());
}

TEST_CASE("qratfunc inv and pow") {
    QRatFunc q = QRatFunc::q();
    QRatFunc r = (q + QRatFunc(1)) / (q - QRatFunc(2));
    CHECK(r * r.inv() == QRatFunc(1));
    CHECK(r.pow(0) == QRatFunc(1));
    CHECK(r.pow(3) == r * r * r);
    CHECK(r.pow(-2) == (r * r).inv());
    CHECK_THROWS_AS(QRatFunc(0).inv(), qpfd::DivisionByZero);
    CHECK_THROWS_AS(QRatFunc(0).pow(-1), qpfd::DivisionByZero);
    CHECK(QRatFunc(0).pow(0) == QRatFunc(1));
}

TEST_CASE("qratfunc field axioms on random triples") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 150; ++t) {
        QRatFunc a = rand_qrf(rng);
        QRatFunc b = rand_qrf(rng);
        QRatFunc c = rand_qrf(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + QRatFunc(0) == a);
        CHECK(a * QRatFunc(1) == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inv() == QRatFunc(1));
    }
}

TEST_CASE("qratfunc eval_at") {
    QRatFunc q = QRatFunc::q();
    QRatFunc r = (q * q + QRatFunc(1)) / (q - QRatFunc(1));
    CHECK(r.eval_at(Rational(2)) == Rational(5));
    CHECK(r.eval_at(Rational(1, 2)) == Rational(-5, 2));
    CHECK_THROWS_AS(r.eval_at(Rational(1)), qpfd::PoleAtSample);
    CHECK(QRatFunc(Rational(7)).eval_at(Rational(100)) == Rational(7));
}

TEST_CASE("qratfunc subst_q_inverse") {
    QRatFunc q = QRatFunc::q();
    // [3] = 1 + q + q^2 maps to 1 + 1/q + 1/q^2 = (q^2 + q + 1)/q^2.
    QRatFunc three = QRatFunc(1) + q + q * q;
    CHECK(three.subst_q_inverse() == three / (q * q));
    CHECK(q.subst_q_inverse() == q.inv());
    CHECK(QRatFunc(Rational(5, 3)).subst_q_inverse() == QRatFunc(Rational(5, 3)));

    // Involution on random elements.
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 60; ++t) {
        QRatFunc a = rand_qrf(rng);
        CHECK(a.subst_q_inverse().subst_q_inverse() == a);
    }
    // Ring morphism.
    for (int t = 0; t < 40; ++t) {
        QRatFunc a = rand_qrf(rng);
        QRatFunc b = rand_qrf(rng);
        CHECK((a + b).subst_q_inverse() == a.subst_q_inverse() + b.subst_q_inverse());
        CHECK((a * b).subst_q_inverse() == a.subst_q_inverse() * b.subst_q_inverse());
    }
}
