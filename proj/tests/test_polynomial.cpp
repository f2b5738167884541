#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classforge/family.hpp"
#include "classforge/irreducibility.hpp"
#include "classforge/mod_factor.hpp"
#include "classforge/primality.hpp"
#include "classforge/resultant.hpp"
#include "classforge/sturm.hpp"

using namespace classforge;

namespace {

// Independent resultant oracle: Bareiss fraction-free elimination on the
// Sylvester matrix.
Integer sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    int size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size, Integer(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
    Integer denom = 1;
    int swaps = 0;
    for (int k = 0; k < size - 1; ++k) {
        if (sign(a[k][k]) == 0) {
            int piv = -1;
            for (int i = k + 1; i < size; ++i)
                if (sign(a[i][k]) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            ++swaps;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j)
                a[i][j] = divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], denom);
        denom = a[k][k];
    }
    Integer det = a[size - 1][size - 1];
    return swaps % 2 ? Integer(-det) : det;
}

IntPoly random_int_poly(gmp_randclass& rng, int max_deg, long coeff_range) {
    int d = 1 + static_cast<int>(mpz_class(rng.get_z_range(max_deg)).get_ui());
    std::vector<Integer> v;
    for (int i = 0; i <= d; ++i)
        v.push_back(rng.get_z_range(2 * coeff_range + 1) - coeff_range);
    if (sign(v.back()) == 0) v.back() = 1;
    return IntPoly(std::move(v));
}

} // namespace

TEST_CASE("resultant: the excluded-prime trio") {
    Integer r1 = resultant(IntPoly({-143, 30}), IntPoly({108, 0, 1}));
    CHECK(r1 == pow_i(7, 6));
    CHECK(r1 == 117649);
    Integer r2 = resultant(IntPoly({-7, 6}), IntPoly({16, 0, 1}));
    CHECK(r2 == pow_i(5, 4));
    CHECK(r2 == 625);
    Integer r3 = resultant(IntPoly({7, 6}), IntPoly({-27, 0, -18, 0, 1}));
    CHECK(r3 == -Integer(37) * 37 * 47);
    CHECK(r3 == -64343);
}

TEST_CASE("resultant agrees with the Sylvester-Bareiss oracle") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(11ul);
    for (int i = 0; i < 120; ++i) {
        IntPoly f = random_int_poly(rng, 7, 12);
        IntPoly g = random_int_poly(rng, 7, 12);
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
    }
    // swap antisymmetry
    IntPoly f({3, -1, 0, 2}), g({1, 4, 1});
    Integer sgn = (f.degree() * g.degree()) % 2 ? -1 : 1;
    CHECK(resultant(f, g) == sgn * resultant(g, f));
}

TEST_CASE("discriminant closed forms and samples") {
    CHECK(discriminant(RatPoly::from_int(IntPoly({108, 0, 1}))) == Rational(-432));
    // quartic f_1 -> 4 * 17^3
    CHECK(discriminant(defining_poly(FamilyId::quartic, 1)) == Rational(19652));
    // cubic f_5 -> 148
    CHECK(discriminant(defining_poly(FamilyId::cubic, 5)) == Rational(148));

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(13ul);
    int done = 0;
    while (done < 20) {
        Integer n = rng.get_z_range(4000) - 2000;
        if (!admissible(FamilyId::sextic, n)) continue;
        Rational expect = make_rational(pow_i(3, 6) * pow_i(n * n + 108, 5), pow_i(2, 14));
        CHECK(discriminant(defining_poly(FamilyId::sextic, n)) == expect);
        ++done;
    }
    done = 0;
    while (done < 20) {
        Integer n = rng.get_z_range(4000) - 2000;
        if (!admissible(FamilyId::quartic, n)) continue;
        CHECK(discriminant(defining_poly(FamilyId::quartic, n)) == Rational(4 * pow_i(n * n + 16, 3)));
        ++done;
    }
    done = 0;
    while (done < 20) {
        Integer n = 5 + 2 * rng.get_z_range(1000);
        if (!admissible(FamilyId::cubic, n)) continue;
        Rational expect(n * n * n * n - 18 * n * n - 27);
        CHECK(discriminant(defining_poly(FamilyId::cubic, n)) == expect);
        ++done;
    }
    // the cubic discriminant is never a perfect square (S_3 Galois group):
    // contiguous scan over the small admissible range
    for (Integer n = 5; n < 400; n += 2)
        CHECK(!is_perfect_square(n * n * n * n - 18 * n * n - 27));
}

TEST_CASE("factor_mod_q pinned examples") {
    // f_5 cubic mod 37: rho = 2 is a root
    auto fac = factor_mod_q(defining_poly_int(FamilyId::cubic, 5), 37);
    bool has_x_minus_2 = false;
    for (const auto& [f, m] : fac.factors)
        if (f.degree() == 1 && f.coeff(0) == 35) has_x_minus_2 = true; // X - 2 = X + 35
    CHECK(has_x_minus_2);

    // X^2 + 14X + 625 mod 13 -> (X-3)(X-9)
    auto fac2 = factor_mod_q(IntPoly({625, 14, 1}), 13);
    REQUIRE(fac2.factors.size() == 2);
    auto roots = roots_mod_prime(IntPoly({625, 14, 1}), 13);
    CHECK(roots == std::vector<Integer>{3, 9});

    auto fac3 = factor_mod_q(IntPoly({1, 0, 1}), 3);
    REQUIRE(fac3.factors.size() == 1);
    CHECK(fac3.pattern().entries == std::vector<std::pair<int, int>>{{2, 1}});

    CHECK_THROWS_AS(factor_mod_q(IntPoly({1, 0, 3}), 3), leading_coefficient_vanishes);
}

TEST_CASE("factor_mod_q product reconstruction fuzz") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(17ul);
    const Integer primes[] = {2, 3, 5, 7, 13, 31, 101};
    for (int i = 0; i < 250; ++i) {
        Integer q = primes[i % 7];
        IntPoly f = random_int_poly(rng, 8, 50);
        if (mpz_divisible_p(f.lc().get_mpz_t(), q.get_mpz_t())) continue;
        auto fac = factor_mod_q(f, q);
        CHECK(fac.product() == ModPoly::from_int(f, q));
        int degsum = 0;
        for (const auto& [g, m] : fac.factors) {
            CHECK(g.lc() == 1);
            degsum += g.degree() * m;
        }
        CHECK(degsum == f.degree());
    }
}

TEST_CASE("splits_linearly_mod") {
    CHECK(splits_linearly_mod(IntPoly({117649, 286, 1}), 13)); // sextic script-P, r=1
    CHECK(splits_linearly_mod(IntPoly({625, 14, 1}), 13));     // quartic script-P, r=1
    CHECK(!splits_linearly_mod(IntPoly({1, 0, 1}), 3));
    // squarefree part handling: (X-1)^4 splits, (X^2+1)^2 mod 3 does not
    IntPoly x_minus_1({-1, 1});
    CHECK(splits_linearly_mod(x_minus_1 * x_minus_1 * x_minus_1 * x_minus_1, 5));
    IntPoly x2p1({1, 0, 1});
    CHECK(!splits_linearly_mod(x2p1 * x2p1, 3));

    // agrees with the full factorization pattern
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(29ul);
    const Integer qs[] = {2, 3, 5, 13};
    for (int i = 0; i < 200; ++i) {
        Integer q = qs[i % 4];
        IntPoly f = random_int_poly(rng, 6, 8);
        if (mpz_divisible_p(f.lc().get_mpz_t(), q.get_mpz_t()) || f.degree() < 1) continue;
        CHECK(splits_linearly_mod(f, q) == factor_mod_q(f, q).pattern().all_linear());
    }
}

TEST_CASE("eisenstein_check") {
    CHECK(eisenstein_check(IntPoly({-2, 0, 1}), 2));
    CHECK(!eisenstein_check(IntPoly({-1, 0, 1}), 2));
    CHECK(!eisenstein_check(IntPoly({-4, 0, 1}), 2)); // p^2 divides the constant
}

TEST_CASE("irreducibility verdicts") {
    auto v1 = irreducibility_over_Q(IntPoly({1, 0, 1}));
    CHECK(v1.status == IrreducibilityVerdict::Status::irreducible);
    REQUIRE(v1.evidence.has_value());
    CHECK(recheck_evidence(IntPoly({1, 0, 1}), *v1.evidence));

    auto v2 = irreducibility_over_Q(IntPoly({-1, 0, 1}));
    CHECK(v2.status == IrreducibilityVerdict::Status::reducible);
    REQUIRE(v2.factor.has_value());
    // the factor divides: X^2 - 1 = (X-1)(X+1)
    CHECK(v2.factor->degree() == 1);

    // X^4 + 1: irreducible over Q but reducible mod every prime; the
    // degree-set refinement cannot settle it, Eisenstein(shift 1) at 2 can.
    auto v3 = irreducibility_over_Q(IntPoly({1, 0, 0, 0, 1}));
    CHECK(v3.status == IrreducibilityVerdict::Status::irreducible);

    auto v4 = irreducibility_over_Q(IntPoly({-2, 0, 1}));
    CHECK(v4.status == IrreducibilityVerdict::Status::irreducible);

    // 25 h(X+1): Eisenstein at 13 certifies irreducibility
    RatPoly h({Rational(1), Rational(-6), make_rational(-385417749, 25),
               make_rational(-770836748, 25), make_rational(-385417749, 25), Rational(-6),
               Rational(1)});
    IntPoly h25s = (h * Rational(25)).clear_denominators().second.shift(1);
    CHECK(eisenstein_check(h25s, 13));
    auto v5 = irreducibility_over_Q(h25s);
    CHECK(v5.status == IrreducibilityVerdict::Status::irreducible);
    REQUIRE(v5.evidence.has_value());
    CHECK(recheck_evidence(h25s, *v5.evidence));
}

TEST_CASE("compose_power") {
    IntPoly f({-2, 0, 1}); // X^2 - 2
    CHECK(f.compose_power(3) == IntPoly({-2, 0, 0, 0, 0, 0, 1}));
    CHECK(f.compose_power(1) == f);
    // coefficient placement with gaps of 5
    IntPoly base({1, 2, 3});
    IntPoly c = base.compose_power(5);
    CHECK(c.degree() == 10);
    CHECK(c.coeff(0) == 1);
    CHECK(c.coeff(5) == 2);
    CHECK(c.coeff(10) == 3);
    CHECK(c.coeff(3) == 0);
}

TEST_CASE("shift") {
    // (X+1)^2 - 2 = X^2 + 2X - 1
    CHECK(IntPoly({-2, 0, 1}).shift(1) == IntPoly({-1, 2, 1}));
}

TEST_CASE("real root isolation") {
    // cubic f_7: a root in (-6, -5) since f(-6) = -7 < 0 and f(-5) = 14 > 0
    RatPoly f7 = defining_poly(FamilyId::cubic, 7);
    CHECK(f7.eval(-6) == Rational(-7));
    CHECK(f7.eval(-5) == Rational(14));
    auto roots7 = isolate_real_roots(f7);
    REQUIRE(roots7.size() == 3);
    bool found = false;
    for (const auto& iv : roots7) {
        auto r = refine_interval(f7, iv, Rational(1, 1000));
        if (r.lo > -6 && r.hi < -5) found = true;
    }
    CHECK(found);

    RatPoly x2m2 = RatPoly::from_int(IntPoly({-2, 0, 1}));
    auto roots = isolate_real_roots(x2m2);
    REQUIRE(roots.size() == 2);
    auto r0 = refine_interval(x2m2, roots[0], Rational(1, 100));
    auto r1 = refine_interval(x2m2, roots[1], Rational(1, 100));
    CHECK(r0.lo > -2);
    CHECK(r0.hi < -1);
    CHECK(r1.lo > 1);
    CHECK(r1.hi < 2);

    // cubic f_5 has exactly 3 real roots (Sturm count)
    SturmChain chain(defining_poly(FamilyId::cubic, 5));
    CHECK(chain.count_real_roots() == 3);

    CHECK_THROWS_AS(isolate_real_roots(RatPoly::from_int(IntPoly({1, 2, 1}))), not_squarefree);
}

TEST_CASE("sturm counts respect interval splits") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(23ul);
    for (int i = 0; i < 40; ++i) {
        IntPoly f = random_int_poly(rng, 6, 10);
        RatPoly rf = RatPoly::from_int(f);
        RatPoly sf = rf;
        RatPoly g = poly_gcd(rf, rf.derivative());
        if (g.degree() >= 1) sf = rf.divmod(g).first;
        auto ivs = isolate_real_roots(sf);
        SturmChain chain(sf);
        CHECK(static_cast<int>(ivs.size()) == chain.count_real_roots());
        for (const auto& iv : ivs) {
            // endpoints straddle: exactly one simple root inside
            CHECK(sign(sf.eval(iv.lo)) * sign(sf.eval(iv.hi)) == -1);
        }
    }
}

TEST_CASE("rational resultant handles denominators") {
    // Res over Q of f/2 and g scales by (1/2)^deg g
    IntPoly f({-143, 30}), g({108, 0, 1});
    RatPoly rf = RatPoly::from_int(f) * Rational(1, 2);
    Rational expect = make_rational(117649, 4); // (1/2)^2 * 117649
    CHECK(resultant(rf, RatPoly::from_int(g)) == expect);
}
