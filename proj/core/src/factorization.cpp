#include "classforge/factorization.hpp"

#include <algorithm>
#include <map>

#include "classforge/primality.hpp"

namespace classforge {

Integer PrimeFactorization::value() const {
    Integer v = unit;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

unsigned PrimeFactorization::valuation(const Integer& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

namespace {

constexpr unsigned long trial_bound = 100000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(trial_bound, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i < trial_bound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j < trial_bound; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n,
// or 0 when the iteration budget is exhausted.
Integer pollard_brent(const Integer& n, std::uint64_t& budget, gmp_randclass& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    while (budget > 0) {
        Integer y = 1 + rng.get_z_range(n - 1);
        Integer c = 1 + rng.get_z_range(n - 1);
        Integer x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = floor_mod(y * y + c, n);
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = floor_mod(y * y + c, n);
                    q = floor_mod(q * abs_i(x - y), n);
                }
                budget = budget > lim ? budget - lim : 0;
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = floor_mod(ys * ys + c, n);
                g = gcd(abs_i(x - ys), n);
            } while (g == 1);
        }
        if (g != n && g > 1) return g;
        // cycle degenerated; retry with fresh parameters
    }
    return 0;
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out,
                std::uint64_t& budget, gmp_randclass& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    if (is_perfect_square(n)) {
        Integer r = isqrt(n);
        factor_rec(r, out, budget, rng);
        factor_rec(r, out, budget, rng);
        return;
    }
    Integer g = pollard_brent(n, budget, rng);
    if (sign(g) == 0)
        throw factorization_timeout("rho budget exhausted on " + to_string(n));
    factor_rec(g, out, budget, rng);
    factor_rec(divexact(n, g), out, budget, rng);
}

} // namespace

PrimeFactorization factorize(const Integer& m, std::uint64_t budget) {
    if (sign(m) == 0) throw error("factorize: zero input");
    PrimeFactorization out;
    out.unit = sign(m) < 0 ? -1 : 1;
    Integer n = abs_i(m);

    std::map<Integer, unsigned> acc;
    for (unsigned long p : small_primes()) {
        if (n == 1) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n = divexact(n, Integer(p));
            acc[Integer(p)] += 1;
        }
        if (Integer(p) * Integer(p) > n) break;
    }
    if (n > 1) {
        if (is_prime(n)) {
            acc[n] += 1;
        } else {
            gmp_randclass rng(gmp_randinit_mt);
            rng.seed(n);
            factor_rec(n, acc, budget, rng);
        }
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

} // namespace classforge
