#include "qpfd/registry.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "qpfd/errors.hpp"
#include "qpfd/pfd.hpp"
#include "qpfd/qratfunc.hpp"

namespace qpfd {

namespace {

// ---- deterministic seeding and portable random draws ----

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t instance_seed(std::uint64_t base, const std::string& name, const ParamList& params) {
    std::uint64_t h = splitmix64(base ^ fnv1a(name));
    for (const auto& [k, v] : params) {
        h = splitmix64(h ^ fnv1a(k));
        h = splitmix64(h ^ static_cast<std::uint64_t>(v));
    }
    return h;
}

// Uniform in [lo, hi]; avoids distribution classes so draws are identical
// across standard library implementations.
long long rnd_int(std::mt19937_64& g, long long lo, long long hi) {
    return lo + static_cast<long long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

long long binom2(long long t) { return t * (t - 1) / 2; }

std::string truncated(std::string s) {
    constexpr std::size_t kMax = 400;
    if (s.size() > kMax) {
        s.resize(kMax);
        s += " ...";
    }
    return s;
}

long long get_param(const Instance& inst, const std::string& key) {
    for (const auto& [k, v] : inst.params)
        if (k == key) return v;
    throw std::logic_error("missing instance parameter: " + key);
}

// ---- per-instance claim harness ----

template <class K>
Rational coeff_at_q(const K& c, const Rational& q0) {
    if constexpr (std::is_same_v<K, QRatFunc>) {
        return c.eval_at(q0);
    } else {
        (void)q0;
        return c;
    }
}

template <class K>
class Harness {
  public:
    Harness(const Instance& inst, const RunConfig& cfg, K qval)
        : ctx_(std::move(qval)), rng_(splitmix64(inst.seed)), mutate_(cfg.mutate) {}

    QCombContext<K>& ctx() { return ctx_; }
    std::mt19937_64& rng() { return rng_; }
    const K& q() const { return ctx_.q(); }

    bool ok() const { return ok_; }
    bool skipped() const { return skipped_; }
    const std::string& residual() const { return residual_; }
    std::string note;

    // Instance is inapplicable under the current config (e.g. a fixed l
    // beyond the identity's degree range).
    void mark_skipped(const std::string& reason) {
        skipped_ = true;
        if (note.empty()) note = reason;
    }

    // Equality with the mutation hook applied; all identity comparisons in
    // this file go through here or through ratfunc_equal.
    bool scalar_equal(const K& lhs, const K& rhs) {
        return mutate_ ? lhs == rhs + K(1) : lhs == rhs;
    }

    bool ratfunc_equal(const RatFunc<K>& lhs, const RatFunc<K>& rhs) {
        if (mutate_) return lhs == rhs + RatFunc<K>(K(1));
        if (lhs.den == rhs.den) return lhs.num == rhs.num;
        return lhs == rhs;
    }

    void claim_scalar(const std::string& label, const K& lhs, const K& rhs) {
        if (!ok_) return;
        if (!scalar_equal(lhs, rhs)) fail(label, (lhs - rhs).canonical_text());
    }

    void claim_zero(const std::string& label, const K& v) { claim_scalar(label, v, K(0)); }

    void claim_ratfunc(const std::string& label, const RatFunc<K>& lhs, const RatFunc<K>& rhs) {
        if (!ok_) return;
        if (!ratfunc_equal(lhs, rhs)) {
            fail(label, cross_difference(lhs, rhs).canonical_text("x"));
            return;
        }
        sample_check(label, lhs, rhs);
    }

    void claim_true(const std::string& label, bool holds, const std::string& info) {
        if (ok_ && !holds) fail(label, info);
    }

  private:
    void fail(const std::string& label, const std::string& text) {
        ok_ = false;
        residual_ = label + ": " + truncated(text);
    }

    std::optional<Rational> sample_value(const RatFunc<K>& f, const Rational& x0,
                                         const Rational& q0) {
        try {
            auto horner = [&](const Poly<K>& p) {
                Rational acc(0);
                for (int i = p.degree(); i >= 0; --i) acc = acc * x0 + coeff_at_q(p.coeff(i), q0);
                return acc;
            };
            Rational d = horner(f.den);
            if (d.is_zero()) return std::nullopt;
            return horner(f.num) / d;
        } catch (const PoleAtSample&) {
            return std::nullopt;
        }
    }

    // Structural equality passed; confirm agreement at a few exact sample
    // points as a guard against a broken comparison routine.
    void sample_check(const std::string& label, const RatFunc<K>& a, const RatFunc<K>& b) {
        if (mutate_) return;
        int done = 0;
        for (int attempt = 0; attempt < 60 && done < 3; ++attempt) {
            Rational x0(rnd_int(rng_, -12, 12), rnd_int(rng_, 1, 4));
            Rational q0(rnd_int(rng_, 2, 9), rnd_int(rng_, 1, 3));
            if (q0 == Rational(1) || q0 == Rational(0) || q0 == Rational(-1)) continue;
            auto va = sample_value(a, x0, q0);
            auto vb = sample_value(b, x0, q0);
            if (!va || !vb) continue;
            if (*va != *vb) {
                fail(label + " [sample cross-check]",
                     "disagreement at x=" + x0.canonical_text() + ", q=" + q0.canonical_text());
                return;
            }
            ++done;
        }
    }

    QCombContext<K> ctx_;
    std::mt19937_64 rng_;
    bool mutate_;
    bool ok_ = true;
    bool skipped_ = false;
    std::string residual_;
};

// Shared guard for checkers that sweep an inner parameter: a fixed value
// outside [lo, hi] makes the instance inapplicable rather than a failure.
template <class K>
bool skip_if_out_of_range(Harness<K>& h, const std::optional<long long>& fixed, long long lo,
                          long long hi) {
    if (fixed && (*fixed < lo || *fixed > hi)) {
        h.mark_skipped("fixed inner parameter " + std::to_string(*fixed) + " outside [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return true;
    }
    return false;
}

// ---- shared construction helpers ----

template <class K>
Poly<K> random_poly_below(std::mt19937_64& g, int deg_bound) {
    for (;;) {
        int d = static_cast<int>(rnd_int(g, 0, deg_bound - 1));
        std::vector<K> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = K(rnd_int(g, -9, 9));
        Poly<K> p(std::move(c));
        if (!p.is_zero()) return p;
    }
}

template <class K>
Poly<K> random_poly_exact(std::mt19937_64& g, int deg) {
    std::vector<K> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = K(rnd_int(g, -9, 9));
    long long lead = rnd_int(g, 1, 9);
    if (rnd_int(g, 0, 1) == 1) lead = -lead;
    c.back() = K(lead);
    return Poly<K>(std::move(c));
}

// (1 - x q^j) for j = 0..count-1.
template <class K>
std::vector<Poly<K>> qx_factors(QCombContext<K>& ctx, int count) {
    std::vector<Poly<K>> f(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        f[static_cast<std::size_t>(j)] = Poly<K>(K(1)) - Poly<K>::monomial(1, ctx.qpow(j));
    return f;
}

// prod of factors[i]^m over i != j, i.e. (x;q)-denominator with pole j removed.
template <class K>
std::vector<Poly<K>> cofactor_products(const std::vector<Poly<K>>& factors, int m) {
    const int s = static_cast<int>(factors.size());
    std::vector<Poly<K>> out(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
        Poly<K> p(K(1));
        for (int i = 0; i < s; ++i)
            if (i != j) p = p * factors[static_cast<std::size_t>(i)].pow(m);
        out[static_cast<std::size_t>(j)] = std::move(p);
    }
    return out;
}

// x^n (q/x;q)_n = prod_{t=1..n} (x - q^t).
template <class K>
Poly<K> reversed_qx_poch(QCombContext<K>& ctx, int n) {
    return ctx.qpochhammer(n).scale_arg(ctx.q()).reverse_to_x_power(n);
}

// (H_j(q) - q H_{n-j}(1/q)) / (1 - q), the first-order pole weight.
template <class K>
K harmonic_weight(QCombContext<K>& ctx, int n, int j) {
    K num = ctx.qharmonic(j) - ctx.q() * ctx.qharmonic_inv(n - j);
    return num / (K(1) - ctx.q());
}

// Displayed Bell arguments at pole j on the q-grid:
// x_l = m (l-1)! sum_{i != j} q^{jl}/(1 - q^{j-i})^l.
template <class K>
std::vector<K> qgrid_bell_args(QCombContext<K>& ctx, int n, int m, int j, int max_l) {
    std::vector<K> xs;
    xs.reserve(static_cast<std::size_t>(max_l));
    for (int l = 1; l <= max_l; ++l) {
        K s(0);
        for (int i = 0; i <= n; ++i) {
            if (i == j) continue;
            s = s + (K(1) - ctx.qpow(j - i)).pow(-static_cast<long long>(l));
        }
        mpz_class w = mpz_class(m) * factorial_z(l - 1);
        xs.push_back(K{Rational(w)} * ctx.qpow(static_cast<long long>(j) * l) * s);
    }
    return xs;
}

template <class K>
K rational_const(const mpz_class& num, const mpz_class& den) {
    return K{Rational(num, den)};
}

// ---- classical (q-free) checkers; always over Q ----

void check_apery(Harness<Rational>& h, int n) {
    Rational a{mpz_class(apery_number(n))};
    static const long long frozen[4] = {1, 5, 73, 1445};
    if (n <= 3) h.claim_scalar("frozen value", a, Rational(frozen[n]));
    if (n >= 2) {
        long long t = n - 1;
        Rational lhs = Rational(static_cast<long long>(n) * n * n) * a;
        Rational rhs = Rational(34 * t * t * t + 51 * t * t + 27 * t + 5) *
                           Rational(mpz_class(apery_number(n - 1))) -
                       Rational(t * t * t) * Rational(mpz_class(apery_number(n - 2)));
        h.claim_scalar("three-term recurrence", lhs, rhs);
    }
    // q -> 1 limit of the q-analog; inherently symbolic, so built locally.
    QCombContext<QRatFunc> sctx{QRatFunc::q()};
    h.claim_scalar("q->1 limit of q-analog", Rational(sctx.q_apery_poly(n).eval_at(Rational(1))), a);
}

void check_ahlgren_ono(Harness<Rational>& h, int n) {
    std::vector<Rational> H(static_cast<std::size_t>(2 * n) + 1);
    for (int k = 0; k <= 2 * n; ++k) H[static_cast<std::size_t>(k)] = harmonic_number(k);
    Rational s(0);
    for (int k = 1; k <= n; ++k) {
        mpz_class b = binomial_z(n, k) * binomial_z(n + k, k);
        mpz_class b2 = b * b;
        Rational inner = Rational(1) + Rational(2 * k) * H[static_cast<std::size_t>(n + k)] +
                         Rational(2 * k) * H[static_cast<std::size_t>(n - k)] -
                         Rational(4 * k) * H[static_cast<std::size_t>(k)];
        s += Rational(b2) * inner;
    }
    h.claim_zero("harmonic binomial sum", s);
}

void check_chu(Harness<Rational>& h, int n) {
    using P = Poly<Rational>;
    std::vector<Rational> H(static_cast<std::size_t>(2 * n) + 1);
    for (int k = 0; k <= 2 * n; ++k) H[static_cast<std::size_t>(k)] = harmonic_number(k);
    RatFunc<Rational> lhs;
    for (int j = 0; j <= n; ++j) {
        mpz_class b = binomial_z(n, j) * binomial_z(n + j, j);
        mpz_class b2 = b * b;
        Rational bb(b2);
        Rational cj = Rational(1) +
                      Rational(2 * j) * (H[static_cast<std::size_t>(n + j)] -
                                         H[static_cast<std::size_t>(j)]) +
                      Rational(2 * j) * (H[static_cast<std::size_t>(n - j)] -
                                         H[static_cast<std::size_t>(j)]);
        P xj = P::variable() + P(Rational(j));
        P num = P(Rational(-j)) + P(cj) * xj;
        lhs += RatFunc<Rational>(num * bb, xj * xj);
    }
    P rising(Rational(1)), falling(Rational(1));
    for (int i = 0; i <= n; ++i) rising = rising * (P::variable() + P(Rational(i)));
    for (int i = 1; i <= n; ++i) falling = falling * (P(Rational(i)) - P::variable());
    RatFunc<Rational> rhs(P::variable() * falling * falling, rising * rising);
    h.claim_ratfunc("pole expansion", lhs, rhs);
}

void check_euler(Harness<Rational>& h, int n, std::optional<long long> fixed_l) {
    if (skip_if_out_of_range(h, fixed_l, 0, n)) return;
    for (long long l = fixed_l.value_or(0); l <= (fixed_l ? *fixed_l : n); ++l) {
        mpz_class s(0);
        for (int j = 0; j <= n; ++j) {
            mpz_class jp;
            mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j),
                          static_cast<unsigned long>(l));
            mpz_class term = binomial_z(n, j) * jp;
            if (j % 2 == 0)
                s += term;
            else
                s -= term;
        }
        mpz_class expect(0);
        if (l == n) {
            expect = factorial_z(n);
            if (n % 2 != 0) expect = -expect;
        }
        h.claim_scalar("l=" + std::to_string(l), Rational(s), Rational(expect));
    }
}

// ---- q-identity checkers, generic over the coefficient field ----

template <class K>
void check_q_apery_norms(Harness<K>& h, int n) {
    K low = h.ctx().q_apery_laurent(n);
    K poly = h.ctx().q_apery_poly(n);
    h.claim_scalar("normalization shift", low * h.ctx().qpow(static_cast<long long>(n) * n), poly);
    QCombContext<QRatFunc> sctx{QRatFunc::q()};
    h.claim_scalar("q->1 limit", K{sctx.q_apery_poly(n).eval_at(Rational(1))},
                   K{Rational(mpz_class(apery_number(n)))});
}

void check_pfd_cross(Harness<Rational>& h, int trials) {
    auto& g = h.rng();
    for (int t = 0; t < trials && h.ok(); ++t) {
        int s = static_cast<int>(rnd_int(g, 1, 4));
        int m = static_cast<int>(rnd_int(g, 1, 3));
        std::vector<Rational> poles;
        while (static_cast<int>(poles.size()) < s) {
            Rational cand(rnd_int(g, -9, 9), rnd_int(g, 1, 3));
            bool dup = false;
            for (const auto& p : poles) dup = dup || p == cand;
            if (!dup) poles.push_back(cand);
        }
        PoleSpec<Rational> spec(std::move(poles), m);
        Poly<Rational> Q = random_poly_below<Rational>(g, s * m);
        auto closed = decompose_closed_form(Q, spec);
        auto solved = decompose_linear_solve(Q, spec);
        std::string tag = "trial " + std::to_string(t);
        h.claim_true(tag + " engine agreement", closed == solved,
                     "closed form and elimination differ");
        if (!h.ok()) return;
        RatFunc<Rational> rec = recombine(closed, spec);
        h.claim_true(tag + " recombination", rec.num == Q, "recombined numerator is not Q");
        // Exactness implies the mutated comparison path must also be alive:
        h.claim_ratfunc(tag + " as rational function", RatFunc<Rational>(Q, spec.denominator()),
                        rec);
    }
}

// The full expansion of (q;q)_n^m Q/(x;q)_{n+1}^m over poles q^{-j}.
// Returns the per-pole coefficients d_{j,e} of 1/(1-xq^j)^e computed from
// the displayed sums, and claims the expansion against the left side.
template <class K>
void check_qpfd(Harness<K>& h, int n, int m, int trials) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, m);
    Poly<K> den = ctx.qpochhammer(n + 1).pow(m);
    K scalar = ctx.qfactorial(n).pow(m);

    // Pole-local data is independent of Q.
    std::vector<std::vector<K>> bells(static_cast<std::size_t>(n) + 1);
    std::vector<K> prefactor(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        std::vector<K> xs = qgrid_bell_args(ctx, n, m, j, m - 1);
        if (m >= 2) {
            K x1_harmonic = K{Rational(m)} * ctx.qpow(j) * harmonic_weight(ctx, n, j);
            h.claim_scalar("x1 harmonic form j=" + std::to_string(j), x1_harmonic, xs[0]);
        }
        auto& bj = bells[static_cast<std::size_t>(j)];
        bj.resize(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) bj[static_cast<std::size_t>(k)] = bell_partition<K>(k, xs);
        prefactor[static_cast<std::size_t>(j)] =
            ctx.qbinomial(n, j).pow(m) * ctx.qpow(m * binom2(j + 1));
    }

    for (int t = 0; t < trials && h.ok(); ++t) {
        Poly<K> Q = random_poly_below<K>(h.rng(), (n + 1) * m);
        std::vector<Poly<K>> derivs(static_cast<std::size_t>(m));
        derivs[0] = Q;
        for (int i = 1; i < m; ++i)
            derivs[static_cast<std::size_t>(i)] = derivs[static_cast<std::size_t>(i - 1)].derivative();

        Poly<K> rhs_num;
        std::vector<PfdTerm<K>> display_terms;
        for (int j = 0; j <= n; ++j) {
            std::vector<K> by_power(static_cast<std::size_t>(m) + 1, K(0));
            for (int i = 0; i < m; ++i) {
                K qi = derivs[static_cast<std::size_t>(i)].eval(ctx.qpow(-j));
                if (qi.is_zero()) continue;
                for (int k = 0; i + k <= m - 1; ++k) {
                    int e = m - i - k;
                    K w = rational_const<K>(1, factorial_z(i) * factorial_z(k));
                    K term = qi * bells[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                             w * ctx.qpow(-static_cast<long long>(j) * (i + k));
                    if ((static_cast<long long>(m) * j + i) % 2 != 0) term = -term;
                    by_power[static_cast<std::size_t>(e)] =
                        by_power[static_cast<std::size_t>(e)] + term;
                }
            }
            Poly<K> num_j;
            for (int e = 1; e <= m; ++e) {
                K d = prefactor[static_cast<std::size_t>(j)] * by_power[static_cast<std::size_t>(e)];
                if (d.is_zero()) continue;
                display_terms.push_back({j, e, d});
                num_j = num_j + factors[static_cast<std::size_t>(j)].pow(m - e) * d;
            }
            rhs_num = rhs_num + num_j * cof[static_cast<std::size_t>(j)];
        }
        std::string tag = "trial " + std::to_string(t);
        h.claim_ratfunc(tag + " expansion", RatFunc<K>(Q * scalar, den),
                        RatFunc<K>(rhs_num, den));
        if (!h.ok()) return;
        auto engine = decompose_q_grid(Q, n, m, ctx);
        auto display = Decomposition<K>::normalized(std::move(display_terms));
        h.claim_true(tag + " engine vs display", engine.terms == display.terms,
                     "coefficient sets differ");
    }
}

template <class K>
void check_qpfd_m1(Harness<K>& h, int n, int trials) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, 1);
    Poly<K> den = ctx.qpochhammer(n + 1);
    K scalar = ctx.qfactorial(n);
    for (int t = 0; t < trials && h.ok(); ++t) {
        Poly<K> Q = random_poly_below<K>(h.rng(), n + 1);
        Poly<K> rhs_num;
        for (int j = 0; j <= n; ++j) {
            K c = ctx.qbinomial(n, j) * ctx.qpow(binom2(j + 1)) * Q.eval(ctx.qpow(-j));
            if (j % 2 != 0) c = -c;
            rhs_num = rhs_num + cof[static_cast<std::size_t>(j)] * c;
        }
        h.claim_ratfunc("trial " + std::to_string(t) + " cover-up expansion",
                        RatFunc<K>(Q * scalar, den), RatFunc<K>(rhs_num, den));
    }
}

template <class K>
void check_qpfd_m2(Harness<K>& h, int n, int trials) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, 2);
    Poly<K> den = ctx.qpochhammer(n + 1).pow(2);
    K scalar = ctx.qfactorial(n).pow(2);
    std::vector<K> hw(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) hw[static_cast<std::size_t>(j)] = harmonic_weight(ctx, n, j);
    for (int t = 0; t < trials && h.ok(); ++t) {
        Poly<K> Q = random_poly_below<K>(h.rng(), 2 * (n + 1));
        Poly<K> Qd = Q.derivative();
        Poly<K> rhs_num;
        for (int j = 0; j <= n; ++j) {
            K q0 = Q.eval(ctx.qpow(-j));
            K q1 = Qd.eval(ctx.qpow(-j));
            K first_order = K(2) * q0 * hw[static_cast<std::size_t>(j)] - ctx.qpow(-j) * q1;
            Poly<K> num_j = Poly<K>(q0) + factors[static_cast<std::size_t>(j)] * first_order;
            K pre = ctx.qbinomial(n, j).pow(2) * ctx.qpow(static_cast<long long>(j) * (j + 1));
            rhs_num = rhs_num + num_j * cof[static_cast<std::size_t>(j)] * pre;
        }
        h.claim_ratfunc("trial " + std::to_string(t) + " double-pole expansion",
                        RatFunc<K>(Q * scalar, den), RatFunc<K>(rhs_num, den));
    }
}

template <class K>
void check_qpfd_m2_unit(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, 2);
    Poly<K> den = ctx.qpochhammer(n + 1).pow(2);
    Poly<K> rhs_num;
    K at_zero(0);
    for (int j = 0; j <= n; ++j) {
        K hwj = harmonic_weight(ctx, n, j);
        K pre = ctx.qbinomial(n, j).pow(2) * ctx.qpow(static_cast<long long>(j) * (j + 1));
        Poly<K> num_j = Poly<K>(K(1)) + factors[static_cast<std::size_t>(j)] * (K(2) * hwj);
        rhs_num = rhs_num + num_j * cof[static_cast<std::size_t>(j)] * pre;
        at_zero = at_zero + pre * (K(1) + K(2) * hwj);
    }
    h.claim_ratfunc("unit numerator expansion",
                    RatFunc<K>(Poly<K>(ctx.qfactorial(n).pow(2)), den),
                    RatFunc<K>(rhs_num, den));
    h.claim_scalar("x=0 evaluation", ctx.qfactorial(n).pow(2), at_zero);
}

template <class K>
void check_qpfd_monomial(Harness<K>& h, int n, int m, std::optional<long long> fixed_l) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, m);
    Poly<K> den = ctx.qpochhammer(n + 1).pow(m);
    K scalar = ctx.qfactorial(n).pow(m);
    std::vector<std::vector<K>> bells(static_cast<std::size_t>(n) + 1);
    std::vector<K> prefactor(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        std::vector<K> xs = qgrid_bell_args(ctx, n, m, j, m - 1);
        auto& bj = bells[static_cast<std::size_t>(j)];
        bj.resize(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) bj[static_cast<std::size_t>(k)] = bell_partition<K>(k, xs);
        prefactor[static_cast<std::size_t>(j)] =
            ctx.qbinomial(n, j).pow(m) * ctx.qpow(m * binom2(j + 1));
    }
    if (skip_if_out_of_range(h, fixed_l, 0, static_cast<long long>(n + 1) * m - 1)) return;
    long long l_lo = fixed_l.value_or(0);
    long long l_hi = fixed_l.value_or(static_cast<long long>(n + 1) * m - 1);
    for (long long l = l_lo; l <= l_hi && h.ok(); ++l) {
        Poly<K> rhs_num;
        for (int j = 0; j <= n; ++j) {
            Poly<K> num_j;
            for (int i = 0; i < m; ++i) {
                mpz_class bi = binomial_z(l, i);
                if (sgn(bi) == 0) continue;
                for (int k = 0; i + k <= m - 1; ++k) {
                    int e = m - i - k;
                    K term = rational_const<K>(bi, factorial_z(k)) *
                             bells[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                             ctx.qpow(-static_cast<long long>(j) * (k + l));
                    if ((static_cast<long long>(m) * j + i) % 2 != 0) term = -term;
                    num_j = num_j + factors[static_cast<std::size_t>(j)].pow(m - e) * term;
                }
            }
            rhs_num = rhs_num + num_j * cof[static_cast<std::size_t>(j)] *
                      prefactor[static_cast<std::size_t>(j)];
        }
        Poly<K> lhs_num = Poly<K>::monomial(static_cast<int>(l), K(1)) * scalar;
        h.claim_ratfunc("l=" + std::to_string(l) + " monomial expansion",
                        RatFunc<K>(lhs_num, den), RatFunc<K>(rhs_num, den));
    }
}

template <class K>
void check_qpfd_unit(Harness<K>& h, int n, int m) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, m);
    Poly<K> den = ctx.qpochhammer(n + 1).pow(m);
    Poly<K> rhs_num;
    for (int j = 0; j <= n; ++j) {
        std::vector<K> xs = qgrid_bell_args(ctx, n, m, j, m - 1);
        K pre = ctx.qbinomial(n, j).pow(m) * ctx.qpow(m * binom2(j + 1));
        Poly<K> num_j;
        for (int k = 0; k < m; ++k) {
            K term = rational_const<K>(1, factorial_z(k)) * bell_partition<K>(k, xs) *
                     ctx.qpow(-static_cast<long long>(j) * k);
            if ((static_cast<long long>(m) * j) % 2 != 0) term = -term;
            num_j = num_j + factors[static_cast<std::size_t>(j)].pow(k) * term;
        }
        rhs_num = rhs_num + num_j * cof[static_cast<std::size_t>(j)] * pre;
    }
    h.claim_ratfunc("unit numerator expansion",
                    RatFunc<K>(Poly<K>(ctx.qfactorial(n).pow(m)), den),
                    RatFunc<K>(rhs_num, den));
}

template <class K>
void check_zheng(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    Poly<K> R = reversed_qx_poch(ctx, n);
    Poly<K> one_minus_x = Poly<K>(K(1)) - Poly<K>::variable();
    Poly<K> Q = one_minus_x * R * R;
    Poly<K> Qd = Q.derivative();
    K fn2 = ctx.qfactorial(n).pow(2);
    for (int j = 0; j <= n && h.ok(); ++j) {
        K nb = ctx.qbinomial(n + j, j);
        K expect = ctx.qpow(-static_cast<long long>(j) * (2 * n + 1)) *
                   (ctx.qpow(j) - K(1)) * fn2 * nb * nb;
        h.claim_scalar("pole value j=" + std::to_string(j), Q.eval(ctx.qpow(-j)), expect);
        K dexpect = ctx.qpow(-2LL * n * j) * fn2 * nb * nb *
                    (K(-1) - K(2) * ctx.qnumber(j) * (ctx.qharmonic(n + j) - ctx.qharmonic(j)));
        h.claim_scalar("pole derivative j=" + std::to_string(j), Qd.eval(ctx.qpow(-j)), dexpect);
    }
    if (!h.ok()) return;
    // (x;q)_{n+1}^2 = (1-x)^2 (xq;q)_n^2, so Q/(x;q)_{n+1}^2 collapses to
    // the symmetric left side.
    Poly<K> S = ctx.qpochhammer(n).scale_arg(ctx.q());
    Poly<K> lhs_den = one_minus_x * S * S;
    h.claim_ratfunc("left side collapse", RatFunc<K>(R * R, lhs_den),
                    RatFunc<K>(Q, ctx.qpochhammer(n + 1).pow(2)));
    // Per-pole weight [n j]^2 [n+j j]^2 q^{j(j-2n)}: the [n+j j]^2 factor
    // follows from the pole values above and is required for exactness
    // (its q->1 limit is the C(n+j,j)^2 of the classical identity).
    auto factors = qx_factors(ctx, n + 1);
    Poly<K> rhs_num = S * S;  // the 1/(1-x) term over the common denominator
    for (int j = 1; j <= n; ++j) {
        K bj = ctx.qbinomial(n, j) * ctx.qbinomial(n + j, j);
        K w = K(1) - K(4) * ctx.qnumber(j) * ctx.qharmonic(j) +
              K(2) * ctx.qnumber(j) * ctx.qharmonic(n + j) +
              K(2) * ctx.q() * ctx.qnumber(j) * ctx.qharmonic_inv(n - j);
        Poly<K> num_j = Poly<K>(ctx.qpow(j) - K(1)) + factors[static_cast<std::size_t>(j)] * w;
        Poly<K> rest = one_minus_x;
        for (int i = 1; i <= n; ++i)
            if (i != j) rest = rest * factors[static_cast<std::size_t>(i)].pow(2);
        rhs_num = rhs_num + num_j * rest * bj * bj *
                  ctx.qpow(static_cast<long long>(j) * (j - 2 * n));
    }
    h.claim_ratfunc("pole expansion", RatFunc<K>(R * R, lhs_den), RatFunc<K>(rhs_num, lhs_den));
}

template <class K>
void check_zheng_sum(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    K s(0);
    for (int k = 0; k <= n; ++k) {
        K b = ctx.qbinomial(n, k) * ctx.qbinomial(n + k, k);
        K inner = K(2) * ctx.qharmonic(k) - ctx.qharmonic(n + k) -
                  ctx.q() * ctx.qharmonic_inv(n - k);
        s = s + ctx.qpow(static_cast<long long>(k) * (k - 2 * n)) * b * b * inner;
    }
    h.claim_zero("weighted harmonic sum", s);
}

template <class K>
void check_qapery_decomp(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    Poly<K> base = ctx.qpochhammer(n).scale_arg(ctx.qpow(-n));
    Poly<K> Q = base * base;  // (xq^{-n};q)_n^2
    Poly<K> Qd = Q.derivative();
    K one_minus_q = K(1) - ctx.q();
    K fn2 = ctx.qfactorial(n).pow(2);
    std::vector<K> a_coeff(static_cast<std::size_t>(n) + 1);
    std::vector<K> b_coeff(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n && h.ok(); ++j) {
        K nb = ctx.qbinomial(n + j, j);
        K pv = ctx.qpow(-static_cast<long long>(n) * (n + 2 * j + 1)) * fn2 * nb * nb;
        h.claim_scalar("pole value j=" + std::to_string(j), Q.eval(ctx.qpow(-j)), pv);
        K pd = K(2) * ctx.qpow(-static_cast<long long>(n) * (n + 2 * j + 1) + j) * fn2 * nb * nb *
               ((ctx.qharmonic(n + j) - ctx.qharmonic(j)) / one_minus_q);
        h.claim_scalar("pole derivative j=" + std::to_string(j), Qd.eval(ctx.qpow(-j)), pd);
        K bj = ctx.qbinomial(n, j);
        a_coeff[static_cast<std::size_t>(j)] =
            bj * bj * nb * nb *
            ctx.qpow(static_cast<long long>(j) * (j + 1) -
                     static_cast<long long>(n) * (n + 2 * j + 1));
        b_coeff[static_cast<std::size_t>(j)] =
            a_coeff[static_cast<std::size_t>(j)] *
            ((K(4) * ctx.qharmonic(j) - K(2) * ctx.q() * ctx.qharmonic_inv(n - j) -
              K(2) * ctx.qharmonic(n + j)) /
             one_minus_q);
    }
    if (!h.ok()) return;
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, 2);
    Poly<K> den = ctx.qpochhammer(n + 1).pow(2);
    Poly<K> rhs_num;
    for (int j = 0; j <= n; ++j) {
        Poly<K> num_j = Poly<K>(a_coeff[static_cast<std::size_t>(j)]) +
                        factors[static_cast<std::size_t>(j)] * b_coeff[static_cast<std::size_t>(j)];
        rhs_num = rhs_num + num_j * cof[static_cast<std::size_t>(j)];
    }
    h.claim_ratfunc("explicit decomposition", RatFunc<K>(Q, den), RatFunc<K>(rhs_num, den));
    if (!h.ok()) return;

    // Independent oracle: eliminate on the raw pole grid P = prod (x-q^{-j})^2,
    // then rescale by P/(x;q)_{n+1}^2 = q^{-2 binom(n+1,2)} into the q basis.
    auto oracle = decompose_linear_solve(Q, q_pole_spec(n, 2, ctx));
    K scale = ctx.qpow(-2 * binom2(n + 1));
    for (const auto& t : oracle.terms) {
        K d = pole_coeff_to_qbasis(scale * t.coeff, t.pole, t.power, ctx);
        const K& expect = t.power == 2 ? a_coeff[static_cast<std::size_t>(t.pole)]
                                       : b_coeff[static_cast<std::size_t>(t.pole)];
        h.claim_scalar("oracle coefficient j=" + std::to_string(t.pole) +
                           " e=" + std::to_string(t.power),
                       d, expect);
    }

    K aq(0);
    for (int j = 0; j <= n; ++j)
        aq = aq + a_coeff[static_cast<std::size_t>(j)] * ctx.qpow(-j);
    h.claim_scalar("normalized sum (Laurent form)",
                   ctx.qpow(static_cast<long long>(n) * (n + 1)) * aq, ctx.q_apery_laurent(n));
    h.claim_scalar("normalized sum (polynomial form)",
                   ctx.qpow(static_cast<long long>(n) * (2 * n + 1)) * aq, ctx.q_apery_poly(n));
}

template <class K>
void check_qapery_decomp_x0(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    K one_minus_q = K(1) - ctx.q();
    K s(0);
    for (int j = 0; j <= n; ++j) {
        K bj = ctx.qbinomial(n, j);
        K nb = ctx.qbinomial(n + j, j);
        K inner = one_minus_q + K(4) * ctx.qharmonic(j) -
                  K(2) * ctx.q() * ctx.qharmonic_inv(n - j) - K(2) * ctx.qharmonic(n + j);
        s = s + bj * bj * nb * nb *
                ctx.qpow(static_cast<long long>(j) * (j + 1) - 2LL * n * j) * inner;
    }
    h.claim_scalar("x=0 evaluation", s,
                   ctx.qpow(static_cast<long long>(n) * (n + 1)) * one_minus_q);
}

template <class K>
void check_vanish_sum(Harness<K>& h, int n, int m, std::optional<long long> fixed_l) {
    auto& ctx = h.ctx();
    std::vector<std::vector<K>> bells(static_cast<std::size_t>(n) + 1);
    std::vector<K> prefactor(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        std::vector<K> xs = qgrid_bell_args(ctx, n, m, j, m - 1);
        auto& bj = bells[static_cast<std::size_t>(j)];
        bj.resize(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) bj[static_cast<std::size_t>(k)] = bell_partition<K>(k, xs);
        prefactor[static_cast<std::size_t>(j)] =
            ctx.qbinomial(n, j).pow(m) * ctx.qpow(m * binom2(j));
    }
    long long top = static_cast<long long>(m) * (n + 1) - 1;
    if (skip_if_out_of_range(h, fixed_l, 0, top)) return;
    long long l_lo = fixed_l.value_or(0);
    long long l_hi = fixed_l.value_or(top);
    for (long long l = l_lo; l <= l_hi && h.ok(); ++l) {
        Poly<K> Q = random_poly_exact<K>(h.rng(), static_cast<int>(l));
        std::vector<Poly<K>> derivs(static_cast<std::size_t>(m));
        derivs[0] = Q;
        for (int i = 1; i < m; ++i)
            derivs[static_cast<std::size_t>(i)] = derivs[static_cast<std::size_t>(i - 1)].derivative();
        K s(0);
        for (int j = 0; j <= n; ++j) {
            K inner(0);
            for (int i = 0; i < m; ++i) {
                K term = bells[static_cast<std::size_t>(j)][static_cast<std::size_t>(m - 1 - i)] *
                         derivs[static_cast<std::size_t>(i)].eval(ctx.qpow(-j)) *
                         rational_const<K>(1, factorial_z(i) * factorial_z(m - 1 - i));
                if ((static_cast<long long>(m) * j + i + 1) % 2 != 0) term = -term;
                inner = inner + term;
            }
            s = s + prefactor[static_cast<std::size_t>(j)] * inner;
        }
        K expect(0);
        if (l == top) {
            expect = ctx.qfactorial(n).pow(m) * ctx.qpow(-static_cast<long long>(m) * binom2(n + 1)) *
                     Q.leading();
            if ((static_cast<long long>(m) * (n + 1)) % 2 != 0) expect = -expect;
        }
        h.claim_scalar("l=" + std::to_string(l), s, expect);
    }
}

template <class K>
void check_vanish_sum_m1(Harness<K>& h, int n, std::optional<long long> fixed_l) {
    auto& ctx = h.ctx();
    if (skip_if_out_of_range(h, fixed_l, 0, n)) return;
    long long l_lo = fixed_l.value_or(0);
    long long l_hi = fixed_l.value_or(n);
    for (long long l = l_lo; l <= l_hi && h.ok(); ++l) {
        Poly<K> Q = random_poly_exact<K>(h.rng(), static_cast<int>(l));
        K s(0);
        for (int j = 0; j <= n; ++j) {
            K term = ctx.qbinomial(n, j) * ctx.qpow(binom2(j)) * Q.eval(ctx.qpow(-j));
            if (j % 2 != 0) term = -term;
            s = s + term;
        }
        K expect(0);
        if (l == n) {
            expect = ctx.qfactorial(n) * ctx.qpow(-binom2(n + 1)) * Q.leading();
            if (n % 2 != 0) expect = -expect;
        }
        h.claim_scalar("l=" + std::to_string(l), s, expect);
    }
}

template <class K>
void check_q_euler(Harness<K>& h, int n, std::optional<long long> fixed_l) {
    auto& ctx = h.ctx();
    if (skip_if_out_of_range(h, fixed_l, 0, n)) return;
    long long l_lo = fixed_l.value_or(0);
    long long l_hi = fixed_l.value_or(n);
    for (long long l = l_lo; l <= l_hi && h.ok(); ++l) {
        K s(0);
        for (int j = 0; j <= n; ++j) {
            K term = ctx.qbinomial(n, j) * ctx.qpow(binom2(j) - static_cast<long long>(j) * l) *
                     ctx.qnumber(j).pow(l);
            if (j % 2 != 0) term = -term;
            s = s + term;
        }
        K expect(0);
        if (l == n) {
            expect = ctx.qfactorial(n) * (K(1) - ctx.q()).pow(-static_cast<long long>(n)) *
                     ctx.qpow(-binom2(n + 1));
            if (n % 2 != 0) expect = -expect;
        }
        h.claim_scalar("l=" + std::to_string(l), s, expect);
    }
}

template <class K>
void check_vanish_sum_m2(Harness<K>& h, int n, std::optional<long long> fixed_l) {
    auto& ctx = h.ctx();
    std::vector<K> hw(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) hw[static_cast<std::size_t>(j)] = harmonic_weight(ctx, n, j);
    long long top = 2LL * n + 1;
    if (skip_if_out_of_range(h, fixed_l, 0, top)) return;
    long long l_lo = fixed_l.value_or(0);
    long long l_hi = fixed_l.value_or(top);
    for (long long l = l_lo; l <= l_hi && h.ok(); ++l) {
        Poly<K> Q = random_poly_exact<K>(h.rng(), static_cast<int>(l));
        Poly<K> Qd = Q.derivative();
        K s(0);
        for (int j = 0; j <= n; ++j) {
            K bj = ctx.qbinomial(n, j);
            K inner = Qd.eval(ctx.qpow(-j)) -
                      K(2) * ctx.qpow(j) * Q.eval(ctx.qpow(-j)) * hw[static_cast<std::size_t>(j)];
            s = s + bj * bj * ctx.qpow(static_cast<long long>(j) * (j - 1)) * inner;
        }
        K expect(0);
        if (l == top)
            expect = ctx.qfactorial(n).pow(2) *
                     ctx.qpow(-static_cast<long long>(n) * (n + 1)) * Q.leading();
        h.claim_scalar("l=" + std::to_string(l), s, expect);
    }
}

template <class K>
void check_harmonic_vanish(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    K s(0);
    for (int j = 0; j <= n; ++j) {
        K bj = ctx.qbinomial(n, j);
        s = s + bj * bj * ctx.qpow(static_cast<long long>(j) * j) *
                (ctx.qharmonic(j) - ctx.q() * ctx.qharmonic_inv(n - j));
    }
    h.claim_zero("squared-binomial harmonic sum", s);
}

// Two textual variants of the same evaluation differ in whether the trailing
// q H_{n-j}(1/q) term carries a [j]_q factor; exactly one can be the truth.
template <class K>
void check_apery_harmonic(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    K target = ctx.qpow(-static_cast<long long>(n) * (n + 1));
    K plain(0), with_qnumber(0);
    for (int j = 0; j <= n; ++j) {
        K bj = ctx.qbinomial(n, j);
        K nb = ctx.qbinomial(n + j, j);
        K base = bj * bj * nb * nb *
                 ctx.qpow(static_cast<long long>(j) * (j - 1) - 2LL * n * j);
        K shared = K(1) + K(2) * ctx.qnumber(j) * ctx.qharmonic(n + j) -
                   K(4) * ctx.qnumber(j) * ctx.qharmonic(j);
        K tail = K(2) * ctx.q() * ctx.qharmonic_inv(n - j);
        plain = plain + base * (shared + tail);
        with_qnumber = with_qnumber + base * (shared + ctx.qnumber(j) * tail);
    }
    bool plain_holds = h.scalar_equal(plain, target);
    bool qnumber_holds = h.scalar_equal(with_qnumber, target);
    h.claim_true("exactly one variant holds", plain_holds != qnumber_holds,
                 plain_holds ? "both variants hold" : "neither variant holds");
    if (h.ok())
        h.note = qnumber_holds ? "holds with the [j] factor on the q*H_{n-j}(1/q) term"
                               : "holds as printed (no [j] factor on the trailing term)";
}

template <class K>
void check_y_pochhammer(Harness<K>& h, int n, const std::string& y_mode) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, 1);
    Poly<K> den = ctx.qpochhammer(n + 1);
    K fn = ctx.qfactorial(n);
    for (int t = 1; t <= 2 * n + 2 && h.ok(); ++t) {
        K y = (y_mode == "q-power") ? ctx.qpow(t) : K(t);
        // (y q^j;q)_n as a scalar, j = 0..n (so powers up to q^{2n}).
        std::vector<K> shifted(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            K p(1);
            for (int i = 0; i < n; ++i) p = p * (K(1) - ctx.qpow(j + i) * y);
            shifted[static_cast<std::size_t>(j)] = std::move(p);
        }
        // (y;q)_{n+j} = (y;q)_j (y q^j;q)_n: the quotient form is polynomial.
        for (int j = 0; j <= n; ++j) {
            K yj(1), ynj(1);
            for (int i = 0; i < j; ++i) yj = yj * (K(1) - ctx.qpow(i) * y);
            for (int i = 0; i < n + j; ++i) ynj = ynj * (K(1) - ctx.qpow(i) * y);
            h.claim_scalar("sample " + std::to_string(t) + " shift split j=" + std::to_string(j),
                           yj * shifted[static_cast<std::size_t>(j)], ynj);
        }
        if (!h.ok()) return;
        Poly<K> lhs_num;
        for (int j = 0; j <= n; ++j) {
            K c = ctx.qbinomial(n, j) *
                  ctx.qpow(binom2(j + 1) - static_cast<long long>(j) * n) *
                  shifted[static_cast<std::size_t>(j)];
            if (j % 2 != 0) c = -c;
            lhs_num = lhs_num + cof[static_cast<std::size_t>(j)] * c;
        }
        // (y/x;q)_n x^n = prod_{i=0..n-1} (x - q^i y).
        Poly<K> rhs_num(fn);
        for (int i = 0; i < n; ++i)
            rhs_num = rhs_num * (Poly<K>::variable() - Poly<K>(ctx.qpow(i) * y));
        h.claim_ratfunc("sample " + std::to_string(t) + " interpolation",
                        RatFunc<K>(lhs_num, den), RatFunc<K>(rhs_num, den));
    }
}

template <class K>
void check_y_at_q(Harness<K>& h, int n) {
    auto& ctx = h.ctx();
    auto factors = qx_factors(ctx, n + 1);
    auto cof = cofactor_products(factors, 1);
    Poly<K> den = ctx.qpochhammer(n + 1);
    std::vector<K> kernel(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        K c = ctx.qbinomial(n, j) * ctx.qbinomial(n + j, j) *
              ctx.qpow(binom2(j + 1) - static_cast<long long>(j) * n);
        kernel[static_cast<std::size_t>(j)] = c;
    }
    // Part 1: rational-function form.
    Poly<K> lhs_num;
    for (int j = 0; j <= n; ++j) {
        K c = kernel[static_cast<std::size_t>(j)];
        if (j % 2 != 0) c = -c;
        lhs_num = lhs_num + cof[static_cast<std::size_t>(j)] * c;
    }
    h.claim_ratfunc("kernel expansion", RatFunc<K>(lhs_num, den),
                    RatFunc<K>(reversed_qx_poch(ctx, n), den));
    // Part 2: vanishing at x = q^l for l = 1..n.
    for (int l = 1; l <= n && h.ok(); ++l) {
        K s(0);
        for (int j = 0; j <= n; ++j) {
            K term = kernel[static_cast<std::size_t>(j)] * (K(1) - ctx.qpow(j + l)).inv();
            if (j % 2 != 0) term = -term;
            s = s + term;
        }
        h.claim_zero("vanishing l=" + std::to_string(l), s);
    }
    // Part 3: the central-coefficient evaluation.
    for (int l = 1; l <= n && h.ok(); ++l) {
        K s(0);
        for (int j = 0; j <= n - 1; ++j) {
            K term = ctx.qbinomial(n, j) * ctx.qbinomial(n + j, j) *
                     (K(1) - ctx.qpow(n + l)) * (K(1) - ctx.qpow(j + l)).inv() *
                     ctx.qpow(binom2(j + 1) + static_cast<long long>(n) * n -
                              static_cast<long long>(j) * n);
            if ((n + 1 + j) % 2 != 0) term = -term;
            s = s + term;
        }
        h.claim_scalar("central evaluation l=" + std::to_string(l), s,
                       ctx.qbinomial(2 * n, n) * ctx.qpow(binom2(n + 1)));
    }
    // Part 4: the alternating kernel sum.
    K s(0);
    for (int j = 0; j <= n; ++j) {
        K term = kernel[static_cast<std::size_t>(j)];
        if ((n - j) % 2 != 0) term = -term;
        s = s + term;
    }
    h.claim_scalar("alternating sum", s, ctx.qpow(binom2(n + 1)));
}

template <class K>
void check_gen_harmonic(Harness<K>& h, int n, std::optional<long long> fixed_m) {
    auto& ctx = h.ctx();
    if (skip_if_out_of_range(h, fixed_m, 1, n)) return;
    long long m_lo = fixed_m.value_or(1);
    long long m_hi = fixed_m.value_or(n);
    for (long long m = m_lo; m <= m_hi && h.ok(); ++m) {
        const int top = static_cast<int>(m) + n;  // factors (1 - x q^i), i = 1..top
        std::vector<Poly<K>> f(static_cast<std::size_t>(top) + 1, Poly<K>(K(1)));
        for (int i = 1; i <= top; ++i)
            f[static_cast<std::size_t>(i)] = Poly<K>(K(1)) - Poly<K>::monomial(1, ctx.qpow(i));
        Poly<K> den(K(1));
        for (int i = 1; i <= top; ++i) den = den * f[static_cast<std::size_t>(i)];
        // Cofactor products: prod over i in 1..top, i != skip.
        auto cofactor = [&](int skip) {
            Poly<K> p(K(1));
            for (int i = 1; i <= top; ++i)
                if (i != skip) p = p * f[static_cast<std::size_t>(i)];
            return p;
        };
        Poly<K> lhs_num;
        for (int j = 0; j <= n; ++j) {
            K c = ctx.qbinomial(n, j) * ctx.qbinomial(n + j, j) *
                  ctx.qpow(binom2(j) - static_cast<long long>(j) * n);
            if (j % 2 != 0) c = -c;
            Poly<K> dnum;  // H_{m+j,q}(x) - H_{j,q}(x) over the full denominator
            for (int i = j + 1; i <= static_cast<int>(m) + j; ++i)
                dnum = dnum + cofactor(i) * ctx.qpow(i);
            lhs_num = lhs_num + dnum * c;
        }
        Poly<K> rhs_num;
        for (int i = 1; i <= static_cast<int>(m); ++i) {
            // (x q^i;q)_{n+1} = prod_{t=i..i+n} f_t; clear it from den.
            Poly<K> rest(K(1));
            for (int t = 1; t <= top; ++t)
                if (t < i || t > i + n) rest = rest * f[static_cast<std::size_t>(t)];
            Poly<K> head = ctx.qpochhammer(n).scale_arg(ctx.qpow(i - n));
            rhs_num = rhs_num + head * rest * ctx.qpow(i);
        }
        K scale = ctx.qpow(binom2(n + 1));
        if (n % 2 != 0) scale = -scale;
        rhs_num = rhs_num * scale;
        h.claim_ratfunc("m=" + std::to_string(m) + " harmonic difference",
                        RatFunc<K>(lhs_num, den), RatFunc<K>(rhs_num, den));
    }
}

// ---- catalog assembly ----

using CheckFn = std::function<void(const Instance&, const RunConfig&, IdentityReport&)>;

IdentityReport run_timed(const Instance& inst, const RunConfig& cfg, const CheckFn& body) {
    IdentityReport rep;
    rep.name = inst.name;
    rep.params = inst.params;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(inst, cfg, rep);
    } catch (const std::exception& e) {
        rep.status = CheckStatus::Fail;
        rep.residual = std::string("exception: ") + e.what();
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

// Runs `body` with a harness over the field selected by cfg.mode and copies
// the claim outcome into the report.
template <class Body>
void with_harness(const Instance& inst, const RunConfig& cfg, IdentityReport& rep, Body&& body) {
    auto finish = [&rep](auto& h) {
        rep.status = !h.ok() ? CheckStatus::Fail
                             : (h.skipped() ? CheckStatus::Skipped : CheckStatus::Pass);
        rep.residual = h.residual();
        rep.note = h.note;
    };
    if (cfg.mode == CheckMode::SymbolicQ) {
        Harness<QRatFunc> h(inst, cfg, QRatFunc::q());
        body(h);
        finish(h);
    } else {
        Harness<Rational> h(inst, cfg, cfg.q_value);
        body(h);
        finish(h);
    }
}

// Classical identities ignore the q mode entirely.
template <class Body>
void with_rational_harness(const Instance& inst, const RunConfig& cfg, IdentityReport& rep,
                           Body&& body) {
    Harness<Rational> h(inst, cfg, Rational(2));
    body(h);
    rep.status = !h.ok() ? CheckStatus::Fail
                         : (h.skipped() ? CheckStatus::Skipped : CheckStatus::Pass);
    rep.residual = h.residual();
    rep.note = h.note;
}

std::vector<Instance> expand_n(const RunConfig& cfg, const std::string& name, int n_lo) {
    std::vector<Instance> out;
    for (int n = n_lo; n <= cfg.n_max; ++n)
        out.push_back({name, {{"n", n}}, 0});
    return out;
}

std::vector<Instance> expand_nm(const RunConfig& cfg, const std::string& name, int n_lo) {
    std::vector<Instance> out;
    for (int n = n_lo; n <= cfg.n_max; ++n)
        for (int m = 1; m <= cfg.m_max; ++m)
            out.push_back({name, {{"n", n}, {"m", m}}, 0});
    return out;
}

int trials_or(const RunConfig& cfg, int dflt) { return cfg.trials > 0 ? cfg.trials : dflt; }

std::vector<IdentityDescriptor> build_catalog() {
    std::vector<IdentityDescriptor> cat;
    auto add = [&cat](std::string name, std::string description,
                      std::function<std::vector<Instance>(const RunConfig&)> expand,
                      CheckFn body) {
        IdentityDescriptor d;
        d.name = std::move(name);
        d.description = std::move(description);
        d.expand = std::move(expand);
        CheckFn fn = std::move(body);
        d.check = [fn](const Instance& inst, const RunConfig& cfg) {
            return run_timed(inst, cfg, fn);
        };
        cat.push_back(std::move(d));
    };

    add("apery",
        "Apery numbers A(n) = sum_k C(n,k)^2 C(n+k,k)^2: frozen small values, the three-term "
        "recurrence, and the q->1 limit of the q-analog",
        [](const RunConfig& c) { return expand_n(c, "apery", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_rational_harness(inst, cfg, rep, [&](auto& h) {
                check_apery(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("ahlgren_ono",
        "sum_{k=1..n} C(n,k)^2 C(n+k,k)^2 (1 + 2k H_{n+k} + 2k H_{n-k} - 4k H_k) = 0",
        [](const RunConfig& c) { return expand_n(c, "ahlgren_ono", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_rational_harness(inst, cfg, rep, [&](auto& h) {
                check_ahlgren_ono(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("chu",
        "sum_j C(n,j)^2 C(n+j,j)^2 (-j/(x+j)^2 + (1+2j(H_{n+j}-H_j)+2j(H_{n-j}-H_j))/(x+j)) "
        "= x ((1-x)_n)^2 / ((x)_{n+1})^2 over Q(x)",
        [](const RunConfig& c) { return expand_n(c, "chu", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_rational_harness(inst, cfg, rep, [&](auto& h) {
                check_chu(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("euler",
        "sum_j (-1)^j C(n,j) j^l = 0 for 0 <= l < n and (-1)^n n! at l = n",
        [](const RunConfig& c) { return expand_n(c, "euler", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_rational_harness(inst, cfg, rep, [&](auto& h) {
                check_euler(h, static_cast<int>(get_param(inst, "n")), cfg.l);
            });
        });

    add("q_apery_norms",
        "q^{n^2} sum_k q^{k(k-2n)} [n,k]^2 [n+k,k]^2 = sum_k q^{(n-k)^2} [n,k]^2 [n+k,k]^2, "
        "and both give A(n) at q = 1",
        [](const RunConfig& c) { return expand_n(c, "q_apery_norms", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_q_apery_norms(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("pfd_cross",
        "random multi-pole instances: the closed-form decomposition agrees with the elimination "
        "oracle and recombines to Q/P exactly",
        [](const RunConfig& c) {
            return std::vector<Instance>{
                {"pfd_cross", {{"trials", trials_or(c, 100)}}, 0}};
        },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_rational_harness(inst, cfg, rep, [&](auto& h) {
                check_pfd_cross(h, static_cast<int>(get_param(inst, "trials")));
            });
        });

    add("qpfd",
        "(q;q)_n^m Q/(x;q)_{n+1}^m = sum_j [n,j]^m q^{m C(j+1,2)} sum_{i,k} (-1)^{mj+i} "
        "B_k Q^(i)(q^{-j}) / (i! k! q^{j(i+k)} (1-xq^j)^{m-i-k}) for random Q, plus the "
        "harmonic form of x_1 and agreement with the decomposition engine",
        [](const RunConfig& c) { return expand_nm(c, "qpfd", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qpfd(h, static_cast<int>(get_param(inst, "n")),
                           static_cast<int>(get_param(inst, "m")), trials_or(cfg, 5));
            });
        });

    add("qpfd_m1",
        "(q;q)_n Q/(x;q)_{n+1} = sum_j (-1)^j [n,j] q^{C(j+1,2)} Q(q^{-j})/(1-xq^j)",
        [](const RunConfig& c) { return expand_n(c, "qpfd_m1", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qpfd_m1(h, static_cast<int>(get_param(inst, "n")), trials_or(cfg, 5));
            });
        });

    add("qpfd_m2",
        "(q;q)_n^2 Q/(x;q)_{n+1}^2 = sum_j [n,j]^2 q^{j(j+1)} (Q(q^{-j})/(1-xq^j)^2 - "
        "q^{-j}Q'(q^{-j})/(1-xq^j) + 2 Q(q^{-j}) (H_j - qH_{n-j}(1/q))/((1-q)(1-xq^j)))",
        [](const RunConfig& c) { return expand_n(c, "qpfd_m2", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qpfd_m2(h, static_cast<int>(get_param(inst, "n")), trials_or(cfg, 5));
            });
        });

    add("qpfd_m2_unit",
        "the Q = 1 double-pole expansion and its x = 0 evaluation "
        "(q;q)_n^2 = sum_j [n,j]^2 q^{j(j+1)} (1 + 2(H_j - qH_{n-j}(1/q))/(1-q))",
        [](const RunConfig& c) { return expand_n(c, "qpfd_m2_unit", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qpfd_m2_unit(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("qpfd_monomial",
        "Q = x^l: (q;q)_n^m x^l/(x;q)_{n+1}^m = sum_j [n,j]^m q^{m C(j+1,2)} sum_{i,k} C(l,i) "
        "(-1)^{mj+i} B_k / (k! q^{j(k+l)} (1-xq^j)^{m-i-k})",
        [](const RunConfig& c) { return expand_nm(c, "qpfd_monomial", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qpfd_monomial(h, static_cast<int>(get_param(inst, "n")),
                                    static_cast<int>(get_param(inst, "m")), cfg.l);
            });
        });

    add("qpfd_unit",
        "Q = 1: (q;q)_n^m/(x;q)_{n+1}^m = sum_j [n,j]^m q^{m C(j+1,2)} sum_k (-1)^{mj} "
        "B_k / (k! q^{jk} (1-xq^j)^{m-k})",
        [](const RunConfig& c) { return expand_nm(c, "qpfd_unit", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qpfd_unit(h, static_cast<int>(get_param(inst, "n")),
                                static_cast<int>(get_param(inst, "m")));
            });
        });

    add("zheng",
        "x^{2n}(q/x;q)_n^2/((1-x)(xq;q)_n^2) = 1/(1-x) + sum_{j>=1} [n,j]^2 [n+j,j]^2 "
        "q^{j(j-2n)} ((q^j-1)/(1-xq^j)^2 + (1-4[j]H_j+2[j]H_{n+j}+2q[j]H_{n-j}(1/q))/(1-xq^j)), "
        "with the pole value and derivative lemmas for Q = (1-x)(x-q)^2...(x-q^n)^2",
        [](const RunConfig& c) { return expand_n(c, "zheng", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_zheng(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("zheng_sum",
        "sum_k q^{k(k-2n)} [n,k]^2 [n+k,k]^2 (2H_k - H_{n+k} - qH_{n-k}(1/q)) = 0",
        [](const RunConfig& c) { return expand_n(c, "zheng_sum", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_zheng_sum(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("qapery_decomp",
        "(xq^{-n};q)_n^2/(x;q)_{n+1}^2 = sum_j (a_j/(1-xq^j)^2 + b_j/(1-xq^j)) with explicit "
        "q-binomial a_j, b_j; coefficients match the elimination oracle and sum to the "
        "normalized q-analog of A(n)",
        [](const RunConfig& c) { return expand_n(c, "qapery_decomp", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qapery_decomp(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("qapery_decomp_x0",
        "sum_j [n,j]^2 [n+j,j]^2 q^{j(j+1)-2nj} (1-q+4H_j-2qH_{n-j}(1/q)-2H_{n+j}) "
        "= q^{n(n+1)}(1-q)",
        [](const RunConfig& c) { return expand_n(c, "qapery_decomp_x0", 0); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_qapery_decomp_x0(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("vanish_sum",
        "sum_j [n,j]^m q^{m C(j,2)} sum_i (-1)^{mj+i+1} B_{m-1-i} Q^(i)(q^{-j})/(i!(m-1-i)!) "
        "= 0 for deg Q < m(n+1)-1, and (-1)^{m(n+1)} (q;q)_n^m q^{-m C(n+1,2)} a_l at the top "
        "degree",
        [](const RunConfig& c) { return expand_nm(c, "vanish_sum", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_vanish_sum(h, static_cast<int>(get_param(inst, "n")),
                                 static_cast<int>(get_param(inst, "m")), cfg.l);
            });
        });

    add("vanish_sum_m1",
        "sum_j (-1)^j [n,j] q^{C(j,2)} Q(q^{-j}) = 0 for deg Q < n, and "
        "(-1)^n (q;q)_n q^{-C(n+1,2)} a_n at deg Q = n",
        [](const RunConfig& c) { return expand_n(c, "vanish_sum_m1", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_vanish_sum_m1(h, static_cast<int>(get_param(inst, "n")), cfg.l);
            });
        });

    add("q_euler",
        "sum_j (-1)^j [n,j] q^{C(j,2)-jl} [j]^l = 0 for l < n and "
        "(-1)^n (q;q)_n (1-q)^{-n} q^{-C(n+1,2)} at l = n",
        [](const RunConfig& c) { return expand_n(c, "q_euler", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_q_euler(h, static_cast<int>(get_param(inst, "n")), cfg.l);
            });
        });

    add("vanish_sum_m2",
        "sum_j [n,j]^2 q^{j(j-1)} (Q'(q^{-j}) - 2q^j Q(q^{-j})(H_j - qH_{n-j}(1/q))/(1-q)) "
        "= 0 for deg Q < 2n+1, and (q;q)_n^2 q^{-n(n+1)} a_l at deg Q = 2n+1",
        [](const RunConfig& c) { return expand_n(c, "vanish_sum_m2", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_vanish_sum_m2(h, static_cast<int>(get_param(inst, "n")), cfg.l);
            });
        });

    add("harmonic_vanish",
        "sum_j [n,j]^2 q^{j^2} (H_j(q) - q H_{n-j}(1/q)) = 0",
        [](const RunConfig& c) { return expand_n(c, "harmonic_vanish", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_harmonic_vanish(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("apery_harmonic",
        "sum_j [n,j]^2 [n+j,j]^2 q^{j(j-1)-2nj} (1 + 2[j]H_{n+j} - 4[j]H_j + 2q(.)H_{n-j}(1/q)) "
        "= q^{-n(n+1)}: decides whether (.) carries the factor [j]",
        [](const RunConfig& c) { return expand_n(c, "apery_harmonic", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_apery_harmonic(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("y_pochhammer",
        "sum_j (-1)^j [n,j] q^{C(j+1,2)-jn} (yq^j;q)_n/(1-xq^j) = (q;q)_n (y/x;q)_n x^n "
        "/(x;q)_{n+1}, certified at 2n+2 exact y samples",
        [](const RunConfig& c) { return expand_n(c, "y_pochhammer", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_y_pochhammer(h, static_cast<int>(get_param(inst, "n")), cfg.y_mode);
            });
        });

    add("y_at_q",
        "y = q specializations of the interpolation identity: the [n,j][n+j,j] kernel "
        "expansion, vanishing at x = q^l, the [2n,n] evaluation, and the alternating "
        "q^{C(n+1,2)} sum",
        [](const RunConfig& c) { return expand_n(c, "y_at_q", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_y_at_q(h, static_cast<int>(get_param(inst, "n")));
            });
        });

    add("gen_harmonic",
        "sum_j (-1)^j [n,j][n+j,j] q^{C(j,2)-jn} (H_{m+j,q}(x) - H_{j,q}(x)) = "
        "(-1)^n q^{C(n+1,2)} sum_{i=1..m} q^i (xq^{i-n};q)_n/(xq^i;q)_{n+1} for m = 1..n",
        [](const RunConfig& c) { return expand_n(c, "gen_harmonic", 1); },
        [](const Instance& inst, const RunConfig& cfg, IdentityReport& rep) {
            with_harness(inst, cfg, rep, [&](auto& h) {
                check_gen_harmonic(h, static_cast<int>(get_param(inst, "n")), cfg.l);
            });
        });

    return cat;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    // Only '*' is special. Classic two-pointer wildcard match.
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

}  // namespace

const std::vector<IdentityDescriptor>& catalog() {
    static const std::vector<IdentityDescriptor> cat = build_catalog();
    return cat;
}

const IdentityDescriptor& catalog_find(const std::string& name) {
    for (const auto& d : catalog())
        if (d.name == name) return d;
    throw NotFound("unknown identity: " + name);
}

std::vector<std::string> catalog_select(const std::string& pattern) {
    std::vector<std::string> out;
    for (const auto& d : catalog()) {
        if (pattern == "all" || d.name == pattern ||
            (pattern.find('*') != std::string::npos && glob_match(pattern, d.name)))
            out.push_back(d.name);
    }
    if (out.empty()) throw NotFound("no identity matches: " + pattern);
    return out;
}

std::vector<Instance> expand_instances(const RunConfig& config) {
    std::vector<Instance> out;
    for (const auto& name : catalog_select(config.identity)) {
        const auto& desc = catalog_find(name);
        for (Instance& inst : desc.expand(config)) {
            inst.seed = instance_seed(config.seed, inst.name, inst.params);
            out.push_back(std::move(inst));
        }
    }
    return out;
}

std::vector<IdentityReport> run_catalog(const RunConfig& config, RunSummary* summary) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Instance> insts = expand_instances(config);
    std::vector<IdentityReport> out(insts.size());
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || insts.size() <= 1) {
        for (std::size_t i = 0; i < insts.size(); ++i)
            out[i] = catalog_find(insts[i].name).check(insts[i], config);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= insts.size()) break;
                out[i] = catalog_find(insts[i].name).check(insts[i], config);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (summary) {
        *summary = RunSummary{};
        for (const auto& r : out) {
            if (r.status == CheckStatus::Pass) ++summary->pass;
            else if (r.status == CheckStatus::Fail) ++summary->fail;
            else ++summary->skipped;
        }
        summary->elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
    }
    return out;
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

const char* to_string(CheckMode m) {
    return m == CheckMode::SymbolicQ ? "symbolic-q" : "numeric-q";
}

}  // namespace qpfd
