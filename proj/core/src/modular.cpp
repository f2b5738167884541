#include "classforge/modular.hpp"

namespace classforge {

ResidueClass mod_pow(const Integer& base, const Integer& exp, const Integer& modulus) {
    if (modulus < 2) throw error("mod_pow: modulus must be >= 2");
    if (sign(exp) < 0) throw error("mod_pow: negative exponent");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return {r, modulus};
}

ResidueClass inv_mod(const Integer& a, const Integer& modulus) {
    if (modulus < 2) throw error("inv_mod: modulus must be >= 2");
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw not_invertible(to_string(a) + " is not invertible mod " + to_string(modulus));
    return {r, modulus};
}

namespace {

// Merge x = r1 (mod m1) with x = r2 (mod m2) into a congruence mod lcm(m1,m2).
std::pair<Integer, Integer> merge(const Integer& r1, const Integer& m1,
                                  const Integer& r2, const Integer& m2) {
    Integer g = gcd(m1, m2);
    Integer diff = r2 - r1;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()))
        throw moduli_not_coprime("inconsistent congruences sharing modulus factor " + to_string(g));
    Integer l = divexact(m1, g) * m2;
    Integer m2g = divexact(m2, g);
    if (m2g == 1) return {floor_mod(r1, l), l}; // m2 divides m1
    Integer t = floor_mod(divexact(diff, g) * inv_mod(divexact(m1, g), m2g).value, m2g);
    return {floor_mod(r1 + m1 * t, l), l};
}

} // namespace

ResidueClass crt(const std::vector<std::pair<Integer, Integer>>& pairs) {
    if (pairs.empty()) throw error("crt: empty system");
    Integer r = 0, m = 1;
    for (const auto& [ri, mi] : pairs) {
        if (mi < 1) throw error("crt: modulus must be positive");
        if (mi == 1) continue;
        if (m == 1) {
            r = floor_mod(ri, mi);
            m = mi;
        } else {
            std::tie(r, m) = merge(r, m, floor_mod(ri, mi), mi);
        }
    }
    if (m == 1) return {0, 1};
    return {r, m};
}

std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p) {
    Integer x = floor_mod(a, p);
    if (p == 2) return x;
    if (sign(x) == 0) return Integer(0);
    if (mod_pow(x, (p - 1) / 2, p).value != 1) return std::nullopt;

    Integer root;
    if (floor_mod(p, 4) == 3) {
        root = mod_pow(x, (p + 1) / 4, p).value;
    } else {
        // Tonelli-Shanks: p - 1 = q 2^s with q odd
        Integer q = p - 1;
        unsigned long s = 0;
        while (mpz_even_p(q.get_mpz_t())) { q /= 2; ++s; }
        Integer z = 2;
        while (mod_pow(z, (p - 1) / 2, p).value == 1) ++z;
        Integer c = mod_pow(z, q, p).value;
        Integer t = mod_pow(x, q, p).value;
        root = mod_pow(x, (q + 1) / 2, p).value;
        unsigned long m = s;
        while (t != 1) {
            Integer tt = t;
            unsigned long i = 0;
            while (tt != 1) { tt = floor_mod(tt * tt, p); ++i; }
            Integer b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = floor_mod(b * b, p);
            root = floor_mod(root * b, p);
            c = floor_mod(b * b, p);
            t = floor_mod(t * c, p);
            m = i;
        }
    }
    Integer other = p - root;
    return root <= other ? root : other;
}

} // namespace classforge
