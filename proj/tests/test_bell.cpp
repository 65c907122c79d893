#include "doctest.h"
#include "qpfd/bell.hpp"
#include "qpfd/qratfunc.hpp"

#include <span>
#include <vector>

using qpfd::QRatFunc;
using qpfd::Rational;

TEST_CASE("partition multiplicity vectors") {
    auto p0 = qpfd::partition_multiplicities(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = qpfd::partition_multiplicities(4);
    // 4 = 1+1+1+1 = 1+1+2 = 2+2 = 1+3 = 4.
    REQUIRE(p4.size() == 5);
    for (const auto& mult : p4) {
        REQUIRE(mult.size() == 4);
        int total = 0;
        for (int l = 1; l <= 4; ++l) total += l * mult[static_cast<std::size_t>(l - 1)];
        CHECK(total == 4);
    }
    // Ascending lexicographic order, so (0,0,0,1) = {4} comes first.
    CHECK(p4.front() == std::vector<int>{0, 0, 0, 1});
    CHECK(p4.back() == std::vector<int>{4, 0, 0, 0});

    // Partition counts p(n) for n = 1..8.
    const std::size_t counts[] = {1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n)
        CHECK(qpfd::partition_multiplicities(n).size() == counts[n - 1]);
}

TEST_CASE("bell polynomial golden values") {
    // B_3 = x1^3 + 3 x1 x2 + x3, checked at x = (2, 5, 7): 8 + 30 + 7 = 45.
    std::vector<Rational> xs = {Rational(2), Rational(5), Rational(7)};
    CHECK(qpfd::bell_partition<Rational>(3, xs) == Rational(45));
    CHECK(qpfd::bell_recurrence<Rational>(3, xs) == Rational(45));

    // At x_l = 1 for all l, B_n is the Bell number: 1, 1, 2, 5, 15, 52, 203.
    std::vector<Rational> ones(8, Rational(1));
    const long long bell_numbers[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 8; ++n)
        CHECK(qpfd::bell_partition<Rational>(n, ones) == Rational(bell_numbers[n]));

    // B_0 is the empty product.
    CHECK(qpfd::bell_partition<Rational>(0, std::span<const Rational>{}) == Rational(1));
    CHECK(qpfd::bell_recurrence<Rational>(0, std::span<const Rational>{}) == Rational(1));
}

TEST_CASE("bell routes agree over Q") {
    std::vector<Rational> xs;
    for (int l = 1; l <= 8; ++l) xs.push_back(Rational(2 * l - 9, l));
    for (int n = 0; n <= 8; ++n)
        CHECK(qpfd::bell_partition<Rational>(n, xs) == qpfd::bell_recurrence<Rational>(n, xs));
}

TEST_CASE("bell routes agree over Q(q)") {
    QRatFunc q = QRatFunc::q();
    std::vector<QRatFunc> xs;
    for (int l = 1; l <= 8; ++l)
        xs.push_back((QRatFunc(l) + q) / (QRatFunc(1) - QRatFunc::qpow(l)));
    for (int n = 0; n <= 8; ++n)
        CHECK(qpfd::bell_partition<QRatFunc>(n, xs) == qpfd::bell_recurrence<QRatFunc>(n, xs));
}

TEST_CASE("bell argument count is enforced") {
    std::vector<Rational> xs = {Rational(1), Rational(2)};
    CHECK_THROWS_AS(qpfd::bell_partition<Rational>(3, xs), std::invalid_argument);
    CHECK_THROWS_AS(qpfd::bell_recurrence<Rational>(3, xs), std::invalid_argument);
}
