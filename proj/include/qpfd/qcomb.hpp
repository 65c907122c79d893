#ifndef QPFD_QCOMB_HPP
#define QPFD_QCOMB_HPP

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qpfd/poly.hpp"
#include "qpfd/qratfunc.hpp"
#include "qpfd/ratfunc.hpp"

namespace qpfd {

// ---- classical integer/rational combinatorics ----

mpz_class factorial_z(int n);

// binomial(n, k) for n >= 0; zero when k < 0 or k > n.
mpz_class binomial_z(long long n, long long k);

// H_n = sum_{k=1..n} 1/k.
Rational harmonic_number(int n);

// A(n) = sum_k binomial(n,k)^2 * binomial(n+k,k)^2, by the defining sum.
mpz_class apery_number(int n);

// ---- q-combinatorics over a field K containing q ----

// Shared evaluation context for a fixed q in K. K is either QRatFunc with
// q the indeterminate (symbolic) or Rational with q a fixed sample value.
// Memo tables are guarded; concurrent use from several threads is safe.
template <class K>
class QCombContext {
  public:
    explicit QCombContext(K q) : q_(std::move(q)) {}

    const K& q() const { return q_; }

    // q^e for signed e.
    K qpow(long long e) const {
        if constexpr (std::is_same_v<K, QRatFunc>) {
            return QRatFunc::qpow(e);
        } else {
            return q_.pow(e);
        }
    }

    // [k]_q = (1 - q^k)/(1 - q), defined for any integer k; [0]_q = 0.
    K qnumber(long long k) const {
        if (k == 0) return K(0);
        return (K(1) - qpow(k)) / (K(1) - q_);
    }

    // (q;q)_n = prod_{i=1..n} (1 - q^i).
    K qfactorial(int n) {
        std::lock_guard<std::mutex> lk(fact_mu_);
        if (fact_.empty()) fact_.push_back(K(1));
        while (static_cast<int>(fact_.size()) <= n)
            fact_.push_back(fact_.back() * (K(1) - qpow(static_cast<long long>(fact_.size()))));
        return fact_[static_cast<std::size_t>(n)];
    }

    // (x;q)_n = prod_{i=0..n-1} (1 - q^i x), as a polynomial in x.
    Poly<K> qpochhammer(int n) {
        std::lock_guard<std::mutex> lk(poch_mu_);
        if (poch_.empty()) poch_.push_back(Poly<K>(K(1)));
        while (static_cast<int>(poch_.size()) <= n) {
            int i = static_cast<int>(poch_.size()) - 1;
            Poly<K> factor = Poly<K>(K(1)) - Poly<K>::monomial(1, qpow(i));
            poch_.push_back(poch_.back() * factor);
        }
        return poch_[static_cast<std::size_t>(n)];
    }

    // Gaussian binomial [n j]_q = (q;q)_n / ((q;q)_j (q;q)_{n-j});
    // zero outside 0 <= j <= n.
    K qbinomial(int n, int j) {
        if (j < 0 || j > n) return K(0);
        if (j == 0 || j == n) return K(1);
        K fn = qfactorial(n), fj = qfactorial(j), fnj = qfactorial(n - j);
        std::lock_guard<std::mutex> lk(binom_mu_);
        auto it = binom_.find({n, j});
        if (it != binom_.end()) return it->second;
        K v = fn / (fj * fnj);
        binom_.emplace(std::make_pair(n, j), v);
        return v;
    }

    // H_n(q) = sum_{k=1..n} 1/[k]_q.
    K qharmonic(int n) {
        std::lock_guard<std::mutex> lk(harm_mu_);
        if (harm_.empty()) harm_.push_back(K(0));
        while (static_cast<int>(harm_.size()) <= n) {
            long long k = static_cast<long long>(harm_.size());
            harm_.push_back(harm_.back() + qnumber(k).inv());
        }
        return harm_[static_cast<std::size_t>(n)];
    }

    // H_n evaluated at 1/q, renormalized over K: adds q^{k-1}(q-1)/(q^k - 1)
    // per step, which equals 1/[k]_{1/q}.
    K qharmonic_inv(int n) {
        std::lock_guard<std::mutex> lk(harm_inv_mu_);
        if (harm_inv_.empty()) harm_inv_.push_back(K(0));
        while (static_cast<int>(harm_inv_.size()) <= n) {
            long long k = static_cast<long long>(harm_inv_.size());
            K term = qpow(k - 1) * (q_ - K(1)) / (qpow(k) - K(1));
            harm_inv_.push_back(harm_inv_.back() + term);
        }
        return harm_inv_[static_cast<std::size_t>(n)];
    }

    // H_{n,q}(x) = sum_{i=1..n} q^i/(1 - x q^i), over the shared denominator
    // prod_{i=1..n} (1 - x q^i).
    RatFunc<K> gen_harmonic_x(int n) {
        Poly<K> one(K(1));
        std::vector<Poly<K>> factors;
        factors.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            factors.push_back(one - Poly<K>::monomial(1, qpow(i)));
        Poly<K> den = one;
        for (const auto& f : factors) den = den * f;
        Poly<K> num;
        for (int i = 1; i <= n; ++i) {
            Poly<K> term(qpow(i));
            for (int t = 1; t <= n; ++t)
                if (t != i) term = term * factors[static_cast<std::size_t>(t - 1)];
            num = num + term;
        }
        return RatFunc<K>(num, den);
    }

    // sum_k q^{k(k-2n)} [n k]^2 [n+k k]^2 (Laurent normalization; carries
    // negative q-powers). Equals q^{-n^2} * q_apery_poly(n).
    K q_apery_laurent(int n) {
        K s(0);
        for (int k = 0; k <= n; ++k) {
            K b = qbinomial(n, k) * qbinomial(n + k, k);
            s = s + qpow(static_cast<long long>(k) * (k - 2 * n)) * b * b;
        }
        return s;
    }

    // sum_k q^{(n-k)^2} [n k]^2 [n+k k]^2 (polynomial normalization).
    K q_apery_poly(int n) {
        K s(0);
        for (int k = 0; k <= n; ++k) {
            K b = qbinomial(n, k) * qbinomial(n + k, k);
            long long d = n - k;
            s = s + qpow(d * d) * b * b;
        }
        return s;
    }

  private:
    K q_;
    std::mutex fact_mu_, poch_mu_, binom_mu_, harm_mu_, harm_inv_mu_;
    std::vector<K> fact_, harm_, harm_inv_;
    std::vector<Poly<K>> poch_;
    std::map<std::pair<int, int>, K> binom_;
};

}  // namespace qpfd

#endif  // QPFD_QCOMB_HPP
