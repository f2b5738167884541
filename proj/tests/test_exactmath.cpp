#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "classforge/factorization.hpp"
#include "classforge/modular.hpp"
#include "classforge/primality.hpp"
#include "classforge/residue_symbol.hpp"

using namespace classforge;

namespace {

// Independent oracle: repeated multiplication.
Integer slow_pow_mod(const Integer& base, unsigned long exp, const Integer& mod) {
    Integer acc = 1;
    for (unsigned long i = 0; i < exp; ++i) acc = floor_mod(acc * base, mod);
    return acc;
}

// Independent oracle: the set of p-th powers in F_ell.
std::set<Integer> pth_power_set(const Integer& ell, const Integer& p) {
    std::set<Integer> out;
    for (Integer x = 1; x < ell; ++x) out.insert(mod_pow(x, p, ell).value);
    return out;
}

} // namespace

TEST_CASE("mod_pow matches the repeated-squaring oracle") {
    CHECK(mod_pow(2, 6, 31).value == slow_pow_mod(2, 6, 31));
    CHECK(mod_pow(2, 6, 31).value == 2);
    CHECK(mod_pow(5, 0, 7).value == 1);
    CHECK(mod_pow(3, 4, 5).value == 1);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(42ul);
    for (int i = 0; i < 200; ++i) {
        Integer m = 2 + rng.get_z_range(1000);
        Integer b = rng.get_z_range(m);
        unsigned long e = mpz_class(rng.get_z_range(50)).get_ui();
        CHECK(mod_pow(b, Integer(static_cast<long>(e)), m).value == slow_pow_mod(b, e, m));
    }
}

TEST_CASE("mod_pow Fermat property at random primes") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(7ul);
    for (int i = 0; i < 100; ++i) {
        Integer ell = next_prime(2 + rng.get_z_range(100000));
        Integer a = 1 + rng.get_z_range(ell - 1);
        CHECK(mod_pow(a, ell - 1, ell).value == 1);
    }
}

TEST_CASE("inv_mod") {
    CHECK(inv_mod(3, 8).value == 3);
    CHECK(inv_mod(1, 97).value == 1);
    CHECK_THROWS_AS(inv_mod(2, 4), not_invertible);
    for (long a = 1; a < 30; ++a) {
        if (gcd(Integer(a), Integer(30)) != 1) continue;
        CHECK(floor_mod(inv_mod(a, 30).value * a, Integer(30)) == 1);
    }
}

TEST_CASE("crt merges congruences over the lcm") {
    // exhaustive-scan oracle for the non-coprime pair (1 mod 30, 5 mod 8)
    Integer expect = -1;
    for (Integer x = 0; x < 120; ++x)
        if (floor_mod(x, 30) == 1 && floor_mod(x, 8) == 5) { expect = x; break; }
    ResidueClass got = crt({{1, 30}, {5, 8}});
    CHECK(got.modulus == 120);
    CHECK(got.value == expect);
    CHECK(got.value == 61);

    CHECK(crt({{0, 77}}).value == 0);
    CHECK(crt({{0, 77}}).modulus == 77);
    CHECK(crt({{1, 6}, {1, 5}}).value == 1);
    CHECK(crt({{1, 6}, {1, 5}}).modulus == 30);
    CHECK_THROWS_AS(crt({{1, 6}, {2, 4}}), moduli_not_coprime);

    // residues reproduce under reduction by each input modulus
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(99ul);
    for (int i = 0; i < 100; ++i) {
        Integer m1 = 2 + rng.get_z_range(500), m2 = 2 + rng.get_z_range(500);
        Integer r1 = rng.get_z_range(m1), r2 = rng.get_z_range(m2);
        if (floor_mod(r2 - r1, gcd(m1, m2)) != 0) continue;
        ResidueClass rc = crt({{r1, m1}, {r2, m2}});
        CHECK(floor_mod(rc.value, m1) == r1);
        CHECK(floor_mod(rc.value, m2) == r2);
        CHECK(rc.modulus == lcm(m1, m2));
    }
}

TEST_CASE("sqrt_mod_prime") {
    CHECK(*sqrt_mod_prime(9, 13) == 3);
    CHECK(!sqrt_mod_prime(5, 13).has_value()); // 5 is a nonresidue mod 13
    for (Integer p : {Integer(13), Integer(17), Integer(101), Integer(7919)}) {
        for (Integer a = 1; a < 25; ++a) {
            auto r = sqrt_mod_prime(a, p);
            if (r) CHECK(floor_mod(*r * *r, p) == floor_mod(a, p));
        }
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(37));
    CHECK(!is_prime(pow_i(7, 6)));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(is_prime(2));
    // deterministic range cross-check against a sieve
    std::vector<bool> sieve(2000, true);
    sieve[0] = sieve[1] = false;
    for (size_t i = 2; i < sieve.size(); ++i)
        if (sieve[i])
            for (size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    for (size_t i = 0; i < sieve.size(); ++i) CHECK(is_prime(Integer(static_cast<long>(i))) == sieve[i]);
    // strong pseudoprime to several small bases
    CHECK(!is_prime(Integer("3215031751")));
    // large primes
    CHECK(is_prime(Integer("170141183460469231731687303715884105727"))); // 2^127 - 1
    CHECK(!is_prime(Integer("170141183460469231731687303715884105725")));
}

TEST_CASE("factorize recomposes exactly") {
    auto f = factorize(pow_i(7, 6));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == 7);
    CHECK(f.factors[0].second == 6);

    CHECK(factorize(37).factors.size() == 1);
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).value() == 1);
    CHECK(factorize(-12).unit == -1);
    CHECK(factorize(-12).value() == -12);
    CHECK_THROWS_AS(factorize(0), error);

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(2024ul);
    for (int i = 0; i < 60; ++i) {
        Integer m = 1 + rng.get_z_range(Integer("1000000000000"));
        auto fac = factorize(m);
        CHECK(fac.value() == m);
        Integer last = 1;
        for (const auto& [p, e] : fac.factors) {
            CHECK(p > last);
            CHECK(is_prime(p));
            CHECK(e >= 1);
            last = p;
        }
    }
    // product of two 40-bit primes exercises the rho path
    Integer p1 = next_prime(Integer("1099511627776"));
    Integer p2 = next_prime(p1 + 1000);
    auto fac = factorize(p1 * p2);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == p1);
    CHECK(fac.factors[1].first == p2);
}

TEST_CASE("factorize timeout is typed") {
    // two 120-bit primes with a tiny budget
    Integer p1 = next_prime(pow_i(2, 120));
    Integer p2 = next_prime(p1 + 5000);
    CHECK_THROWS_AS(factorize(p1 * p2, 10), factorization_timeout);
}

TEST_CASE("power_residue_symbol") {
    CHECK(power_residue_symbol(2, 31, 5) == Symbol::nonresidue);
    CHECK(power_residue_symbol(2, 151, 5) == Symbol::residue);
    CHECK(power_residue_symbol(7, 11, 7) == Symbol::residue); // 7 does not divide 10
    CHECK_THROWS_AS(power_residue_symbol(62, 31, 5), shared_factor);
}

TEST_CASE("power_residue_symbol matches brute-force p-th power enumeration") {
    for (Integer p : {Integer(2), Integer(3), Integer(5), Integer(7)}) {
        for (Integer ell = 2; ell < 200; ell = next_prime(ell)) {
            auto powers = pth_power_set(ell, p);
            for (Integer a = 1; a < ell; ++a) {
                Symbol want = powers.count(a) ? Symbol::residue : Symbol::nonresidue;
                CHECK(power_residue_symbol(a, ell, p) == want);
            }
        }
    }
}

TEST_CASE("symbol kills p-th powers") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(5ul);
    for (int i = 0; i < 100; ++i) {
        Integer p = 5;
        Integer ell = next_prime(rng.get_z_range(10000) * p + 1);
        while (floor_mod(ell, p) != 1) ell = next_prime(ell);
        Integer a = 1 + rng.get_z_range(ell - 1);
        Integer b = 1 + rng.get_z_range(ell - 1);
        Integer ab = floor_mod(a * mod_pow(b, p, ell).value, ell);
        CHECK(power_residue_symbol(ab, ell, p) == power_residue_symbol(a, ell, p));
    }
}
