#ifndef QPFD_PFD_HPP
#define QPFD_PFD_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "qpfd/bell.hpp"
#include "qpfd/poly.hpp"
#include "qpfd/qcomb.hpp"
#include "qpfd/ratfunc.hpp"

namespace qpfd {

// Distinct poles alpha_0..alpha_{s-1}, each of the same multiplicity m,
// describing the denominator P(x) = prod_j (x - alpha_j)^m.
template <class K>
struct PoleSpec {
    std::vector<K> poles;
    int multiplicity;

    PoleSpec(std::vector<K> ps, int m) : poles(std::move(ps)), multiplicity(m) {
        if (poles.empty()) throw std::invalid_argument("pole spec needs at least one pole");
        if (m < 1) throw std::invalid_argument("pole multiplicity must be positive");
        for (std::size_t i = 0; i < poles.size(); ++i)
            for (std::size_t j = i + 1; j < poles.size(); ++j)
                if (poles[i] == poles[j]) throw DuplicatePoles("repeated pole in spec");
    }

    int size() const { return static_cast<int>(poles.size()); }

    Poly<K> denominator() const {
        Poly<K> p(K(1));
        for (const K& a : poles) p = p * (Poly<K>::variable() - Poly<K>(a)).pow(multiplicity);
        return p;
    }
};

// One summand coeff/(x - alpha_self)^power (or coeff/(1 - x q^j)^power for
// the q-grid basis); `pole` indexes into the owning spec.
template <class K>
struct PfdTerm {
    int pole;
    int power;
    K coeff;

    friend bool operator==(const PfdTerm& a, const PfdTerm& b) {
        return a.pole == b.pole && a.power == b.power && a.coeff == b.coeff;
    }
};

// Zero-coefficient terms are dropped and the rest sorted by (pole, power),
// so structural equality is equality of decompositions.
template <class K>
struct Decomposition {
    std::vector<PfdTerm<K>> terms;

    static Decomposition normalized(std::vector<PfdTerm<K>> ts) {
        std::vector<PfdTerm<K>> kept;
        kept.reserve(ts.size());
        for (auto& t : ts)
            if (!t.coeff.is_zero()) kept.push_back(std::move(t));
        std::sort(kept.begin(), kept.end(), [](const PfdTerm<K>& a, const PfdTerm<K>& b) {
            if (a.pole != b.pole) return a.pole < b.pole;
            return a.power < b.power;
        });
        return Decomposition{std::move(kept)};
    }

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.terms == b.terms;
    }
};

// prod_{i != j} (alpha_j - alpha_i)^{-m}; the inverse scale attached to
// pole j by the closed-form expansion.
template <class K>
K g_at_pole(const PoleSpec<K>& spec, int j) {
    K prod(1);
    for (int i = 0; i < spec.size(); ++i) {
        if (i == j) continue;
        prod = prod * (spec.poles[static_cast<std::size_t>(j)] -
                       spec.poles[static_cast<std::size_t>(i)]);
    }
    return prod.pow(-static_cast<long long>(spec.multiplicity));
}

// The Bell arguments at pole j: x_l = m (l-1)! sum_{i != j} (alpha_j - alpha_i)^{-l}
// for l = 1..max_l.
template <class K>
std::vector<K> bell_args_at_pole(const PoleSpec<K>& spec, int j, int max_l) {
    std::vector<K> xs;
    xs.reserve(static_cast<std::size_t>(max_l));
    for (int l = 1; l <= max_l; ++l) {
        K s(0);
        for (int i = 0; i < spec.size(); ++i) {
            if (i == j) continue;
            K diff = spec.poles[static_cast<std::size_t>(j)] -
                     spec.poles[static_cast<std::size_t>(i)];
            s = s + diff.pow(-static_cast<long long>(l));
        }
        mpz_class w = mpz_class(spec.multiplicity) * factorial_z(l - 1);
        xs.push_back(K{Rational(w)} * s);
    }
    return xs;
}

// Closed-form decomposition of Q/P through derivative data at each pole:
//   coeff of (x - alpha_j)^{-(m-i-k)} is
//   (-1)^k g_j * Q^{(i)}(alpha_j)/i! * B_k(x_1..x_k)/k!,
// summed over i + k <= m - 1. Requires deg Q < s*m.
template <class K>
Decomposition<K> decompose_closed_form(const Poly<K>& Q, const PoleSpec<K>& spec) {
    const int s = spec.size();
    const int m = spec.multiplicity;
    if (Q.degree() >= s * m)
        throw DegreeTooLarge("numerator degree must be below deg P");
    std::vector<PfdTerm<K>> terms;
    std::vector<Poly<K>> derivs(static_cast<std::size_t>(m));
    derivs[0] = Q;
    for (int i = 1; i < m; ++i) derivs[static_cast<std::size_t>(i)] = derivs[static_cast<std::size_t>(i - 1)].derivative();
    for (int j = 0; j < s; ++j) {
        const K& alpha = spec.poles[static_cast<std::size_t>(j)];
        K gj = g_at_pole(spec, j);
        std::vector<K> xs = bell_args_at_pole(spec, j, m - 1);
        std::vector<K> bells(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
            bells[static_cast<std::size_t>(k)] = bell_partition<K>(k, xs);
        std::vector<K> by_power(static_cast<std::size_t>(m) + 1, K(0));
        for (int i = 0; i < m; ++i) {
            K qi = derivs[static_cast<std::size_t>(i)].eval(alpha);
            if (qi.is_zero()) continue;
            for (int k = 0; i + k <= m - 1; ++k) {
                Rational w(mpz_class(1), factorial_z(i) * factorial_z(k));
                if (k % 2 != 0) w = -w;
                int e = m - i - k;
                by_power[static_cast<std::size_t>(e)] =
                    by_power[static_cast<std::size_t>(e)] +
                    qi * bells[static_cast<std::size_t>(k)] * K{w};
            }
        }
        for (int e = 1; e <= m; ++e) {
            K c = gj * by_power[static_cast<std::size_t>(e)];
            if (!c.is_zero()) terms.push_back({j, e, std::move(c)});
        }
    }
    return Decomposition<K>::normalized(std::move(terms));
}

namespace detail {

// Solves A c = rhs over the field K by elimination with exact pivoting.
template <class K>
std::vector<K> solve_linear(std::vector<std::vector<K>> A, std::vector<K> rhs) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw SingularSystem("no pivot in elimination");
        std::swap(A[pivot], A[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            K f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] = A[r][c] - f * A[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    std::vector<K> x(n, K(0));
    for (std::size_t row = n; row-- > 0;) {
        K acc = rhs[row];
        for (std::size_t c = row + 1; c < n; ++c) acc = acc - A[row][c] * x[c];
        x[row] = acc / A[row][row];
    }
    return x;
}

// G_j * (x - alpha_j)^{m-e}: the polynomial multiplying coefficient c_{j,e}
// after clearing P from the ansatz sum.
template <class K>
std::vector<std::vector<Poly<K>>> ansatz_columns(const PoleSpec<K>& spec) {
    const int s = spec.size();
    const int m = spec.multiplicity;
    std::vector<Poly<K>> linear(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j)
        linear[static_cast<std::size_t>(j)] =
            Poly<K>::variable() - Poly<K>(spec.poles[static_cast<std::size_t>(j)]);
    std::vector<std::vector<Poly<K>>> cols(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
        Poly<K> others(K(1));
        for (int i = 0; i < s; ++i)
            if (i != j) others = others * linear[static_cast<std::size_t>(i)].pow(m);
        auto& row = cols[static_cast<std::size_t>(j)];
        row.resize(static_cast<std::size_t>(m) + 1);
        for (int e = 1; e <= m; ++e)
            row[static_cast<std::size_t>(e)] =
                others * linear[static_cast<std::size_t>(j)].pow(m - e);
    }
    return cols;
}

}  // namespace detail

// Independent oracle: write Q/P = sum c_{j,e}/(x - alpha_j)^e, clear P, and
// match coefficients of x^0..x^{sm-1}; the resulting square system is solved
// by exact elimination.
template <class K>
Decomposition<K> decompose_linear_solve(const Poly<K>& Q, const PoleSpec<K>& spec) {
    const int s = spec.size();
    const int m = spec.multiplicity;
    if (Q.degree() >= s * m)
        throw DegreeTooLarge("numerator degree must be below deg P");
    const int n = s * m;
    auto cols = detail::ansatz_columns(spec);
    std::vector<std::vector<K>> A(static_cast<std::size_t>(n),
                                  std::vector<K>(static_cast<std::size_t>(n), K(0)));
    for (int j = 0; j < s; ++j)
        for (int e = 1; e <= m; ++e) {
            int idx = j * m + (e - 1);
            const Poly<K>& p = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
            for (int r = 0; r < n; ++r) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(idx)] = p.coeff(r);
        }
    std::vector<K> rhs(static_cast<std::size_t>(n), K(0));
    for (int r = 0; r < n; ++r) rhs[static_cast<std::size_t>(r)] = Q.coeff(r);
    std::vector<K> sol = detail::solve_linear(std::move(A), std::move(rhs));
    std::vector<PfdTerm<K>> terms;
    for (int j = 0; j < s; ++j)
        for (int e = 1; e <= m; ++e)
            terms.push_back({j, e, sol[static_cast<std::size_t>(j * m + (e - 1))]});
    return Decomposition<K>::normalized(std::move(terms));
}

// Rebuilds the decomposition over the common denominator P; the numerator
// equals Q exactly when the decomposition is exact.
template <class K>
RatFunc<K> recombine(const Decomposition<K>& d, const PoleSpec<K>& spec) {
    auto cols = detail::ansatz_columns(spec);
    Poly<K> num;
    for (const auto& t : d.terms)
        num = num + cols[static_cast<std::size_t>(t.pole)][static_cast<std::size_t>(t.power)] * t.coeff;
    return RatFunc<K>(num, spec.denominator());
}

// ---- the q-power pole grid ----

// Poles q^0 = 1, q^{-1}, ..., q^{-n}, each of multiplicity m; the grid on
// which (x;q)_{n+1}^m factors.
template <class K>
PoleSpec<K> q_pole_spec(int n, int m, const QCombContext<K>& ctx) {
    std::vector<K> poles;
    poles.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) poles.push_back(ctx.qpow(-j));
    return PoleSpec<K>(std::move(poles), m);
}

// c/(x - q^{-j})^e rewritten onto 1/(1 - x q^j)^e: multiplies by (-q^j)^e.
template <class K>
K pole_coeff_to_qbasis(const K& c, int j, int e, const QCombContext<K>& ctx) {
    K f = ctx.qpow(static_cast<long long>(j) * e);
    return (e % 2 == 0) ? c * f : -(c * f);
}

// Inverse rewrite: d/(1 - x q^j)^e back to the (x - q^{-j}) basis.
template <class K>
K qbasis_coeff_to_pole(const K& d, int j, int e, const QCombContext<K>& ctx) {
    K f = ctx.qpow(-static_cast<long long>(j) * e);
    return (e % 2 == 0) ? d * f : -(d * f);
}

// Terms d_{j,e}/(1 - x q^j)^e summing to (q;q)_n^m Q / (x;q)_{n+1}^m.
template <class K>
struct QGridDecomposition {
    int n;
    int m;
    std::vector<PfdTerm<K>> terms;  // pole field holds j; basis 1/(1 - x q^j)^e

    friend bool operator==(const QGridDecomposition& a, const QGridDecomposition& b) {
        return a.n == b.n && a.m == b.m && a.terms == b.terms;
    }
};

// Decomposes (q;q)_n^m Q / (x;q)_{n+1}^m on the q-power grid. Uses the
// closed-form engine on P = prod_j (x - q^{-j})^m and rescales through
//   (x;q)_{n+1} = (-1)^{n+1} q^{binom(n+1,2)} P(x),
// then converts each term to the 1/(1 - x q^j)^e basis.
template <class K>
QGridDecomposition<K> decompose_q_grid(const Poly<K>& Q, int n, int m, QCombContext<K>& ctx) {
    PoleSpec<K> spec = q_pole_spec(n, m, ctx);
    Decomposition<K> base = decompose_closed_form(Q, spec);
    // sigma_inv = (q;q)_n^m * P/(x;q)_{n+1}^m as a scalar:
    // (-1)^{(n+1)m} q^{-m binom(n+1,2)} (q;q)_n^m.
    long long c2 = static_cast<long long>(n + 1) * n / 2;
    K sigma_inv = ctx.qpow(-static_cast<long long>(m) * c2) * ctx.qfactorial(n).pow(m);
    if ((static_cast<long long>(n + 1) * m) % 2 != 0) sigma_inv = -sigma_inv;
    std::vector<PfdTerm<K>> out;
    out.reserve(base.terms.size());
    for (const auto& t : base.terms) {
        K d = pole_coeff_to_qbasis(sigma_inv * t.coeff, t.pole, t.power, ctx);
        out.push_back({t.pole, t.power, std::move(d)});
    }
    return QGridDecomposition<K>{n, m, std::move(out)};
}

// Rebuilds a q-grid decomposition over (x;q)_{n+1}^m; the result equals
// (q;q)_n^m Q/(x;q)_{n+1}^m exactly when the decomposition is exact.
template <class K>
RatFunc<K> recombine_q_grid(const QGridDecomposition<K>& d, QCombContext<K>& ctx) {
    Poly<K> one(K(1));
    std::vector<Poly<K>> factors(static_cast<std::size_t>(d.n) + 1);
    for (int j = 0; j <= d.n; ++j)
        factors[static_cast<std::size_t>(j)] = one - Poly<K>::monomial(1, ctx.qpow(j));
    Poly<K> num;
    for (const auto& t : d.terms) {
        Poly<K> p(t.coeff);
        for (int j = 0; j <= d.n; ++j) {
            int pw = (j == t.pole) ? d.m - t.power : d.m;
            if (pw > 0) p = p * factors[static_cast<std::size_t>(j)].pow(pw);
        }
        num = num + p;
    }
    return RatFunc<K>(num, ctx.qpochhammer(d.n + 1).pow(d.m));
}

}  // namespace qpfd

#endif  // QPFD_PFD_HPP
