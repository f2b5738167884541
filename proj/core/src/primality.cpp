#include "classforge/primality.hpp"

#include "classforge/modular.hpp"

namespace classforge {

namespace {

// One strong-probable-prime round; m odd >= 3, m - 1 = d 2^s.
bool sprp(const Integer& m, const Integer& base, const Integer& d, unsigned long s) {
    Integer a = floor_mod(base, m);
    if (sign(a) == 0) return true;
    Integer x = mod_pow(a, d, m).value;
    if (x == 1 || x == m - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = floor_mod(x * x, m);
        if (x == m - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const Integer& m) {
    if (m < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small_primes) {
        if (m == p) return true;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
    Integer d = m - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) { d /= 2; ++s; }

    Integer two_64 = pow_i(2, 64);
    if (m < two_64) {
        for (int p : small_primes)
            if (!sprp(m, p, d, s)) return false;
        return true;
    }
    // Above 2^64: 40 reproducible pseudorandom bases in [2, m-2].
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(m);
    for (int i = 0; i < 40; ++i) {
        Integer base = 2 + rng.get_z_range(m - 3);
        if (!sprp(m, base, d, s)) return false;
    }
    return true;
}

Integer next_prime(const Integer& m) {
    Integer c = m < 2 ? Integer(2) : m + 1;
    if (mpz_even_p(c.get_mpz_t()) && c > 2) ++c;
    while (!is_prime(c)) c += (c == 2 ? 1 : 2);
    return c;
}

} // namespace classforge
