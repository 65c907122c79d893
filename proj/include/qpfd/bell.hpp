#ifndef QPFD_BELL_HPP
#define QPFD_BELL_HPP

#include <span>
#include <vector>

#include "qpfd/qcomb.hpp"
#include "qpfd/rational.hpp"

namespace qpfd {

// All partitions of n as multiplicity vectors (m_1, ..., m_n) with
// sum l*m_l == n, in ascending lexicographic order. n == 0 yields one
// empty vector (the empty partition).
std::vector<std::vector<int>> partition_multiplicities(int n);

// Complete Bell polynomial B_n(x_1, ..., x_n) by the partition sum
//   B_n = sum over partitions of n! / (prod m_l! * prod (l!)^{m_l})
//         * prod x_l^{m_l}.
// The multinomial weight is an exact integer; xs must supply at least n
// arguments (xs[l-1] is x_l).
template <class K>
K bell_partition(int n, std::span<const K> xs) {
    if (static_cast<int>(xs.size()) < n)
        throw std::invalid_argument("bell_partition: not enough arguments");
    K total(0);
    for (const auto& mult : partition_multiplicities(n)) {
        mpz_class denom(1);
        for (int l = 1; l <= n; ++l) {
            int m = mult[static_cast<std::size_t>(l - 1)];
            if (m == 0) continue;
            mpz_class lf;
            mpz_pow_ui(lf.get_mpz_t(), factorial_z(l).get_mpz_t(), static_cast<unsigned long>(m));
            denom *= factorial_z(m) * lf;
        }
        mpz_class weight, rem;
        mpz_fdiv_qr(weight.get_mpz_t(), rem.get_mpz_t(), factorial_z(n).get_mpz_t(),
                    denom.get_mpz_t());
        if (sgn(rem) != 0) throw std::logic_error("bell_partition: non-integer weight");
        K term{Rational(weight)};
        for (int l = 1; l <= n; ++l) {
            int m = mult[static_cast<std::size_t>(l - 1)];
            if (m > 0) term = term * xs[static_cast<std::size_t>(l - 1)].pow(m);
        }
        total = total + term;
    }
    return total;
}

// The same value by the binomial recurrence
//   B_0 = 1,  B_{t+1} = sum_{k=0..t} binomial(t, k) B_{t-k} x_{k+1}.
// Kept as an independent route from bell_partition on purpose.
template <class K>
K bell_recurrence(int n, std::span<const K> xs) {
    if (static_cast<int>(xs.size()) < n)
        throw std::invalid_argument("bell_recurrence: not enough arguments");
    std::vector<K> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.push_back(K(1));
    for (int t = 0; t < n; ++t) {
        K next(0);
        for (int k = 0; k <= t; ++k) {
            K w{Rational(binomial_z(t, k))};
            next = next + w * b[static_cast<std::size_t>(t - k)] * xs[static_cast<std::size_t>(k)];
        }
        b.push_back(next);
    }
    return b[static_cast<std::size_t>(n)];
}

}  // namespace qpfd

#endif  // QPFD_BELL_HPP
