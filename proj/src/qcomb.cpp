#include "qpfd/qcomb.hpp"

namespace qpfd {

mpz_class factorial_z(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

mpz_class binomial_z(long long n, long long k) {
    if (k < 0 || k > n) return mpz_class(0);
    mpz_class nz(static_cast<long>(n));
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rational harmonic_number(int n) {
    Rational h(0);
    for (int k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

mpz_class apery_number(int n) {
    mpz_class s(0);
    for (int k = 0; k <= n; ++k) {
        mpz_class a = binomial_z(n, k);
        mpz_class b = binomial_z(n + k, k);
        s += a * a * b * b;
    }
    return s;
}

}  // namespace qpfd
