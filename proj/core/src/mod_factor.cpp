#include "classforge/mod_factor.hpp"

#include <algorithm>
#include <map>

#include "classforge/modular.hpp"

namespace classforge {

bool FactorPattern::all_linear() const {
    for (const auto& [d, m] : entries)
        if (d != 1) return false;
    return !entries.empty();
}

FactorPattern ModFactorization::pattern() const {
    FactorPattern p;
    for (const auto& [f, m] : factors) p.entries.emplace_back(f.degree(), m);
    std::sort(p.entries.begin(), p.entries.end());
    return p;
}

ModPoly ModFactorization::product() const {
    ModPoly acc = ModPoly::constant(lc, modulus);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) acc = acc * f;
    return acc;
}

namespace {

// p-th root of f in F_p[X]: f must have nonzero coefficients only at indices
// divisible by p; Frobenius is the identity on the prime field.
ModPoly pth_root(const ModPoly& f) {
    // A vanishing derivative of a nonconstant f forces p <= deg f.
    if (!mpz_fits_ulong_p(f.modulus().get_mpz_t()))
        throw error("pth_root: modulus exceeds polynomial degree range");
    unsigned long p = f.modulus().get_ui();
    std::vector<Integer> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        v.push_back(f.coeff(i));
    return ModPoly(std::move(v), f.modulus());
}

bool is_one(const ModPoly& f) { return f.degree() == 0 && f.coeff(0) == 1; }

// Yun-style squarefree decomposition adapted to characteristic p.
void squarefree_decompose(const ModPoly& f, int mult,
                          std::vector<std::pair<ModPoly, int>>& out) {
    ModPoly df = f.derivative();
    if (df.is_zero()) {
        if (f.degree() == 0) return;
        squarefree_decompose(pth_root(f), mult * static_cast<int>(f.modulus().get_ui()), out);
        return;
    }
    ModPoly c = mod_gcd(f, df);
    ModPoly w = f.divmod(c).first;
    int i = 1;
    while (!is_one(w)) {
        ModPoly y = mod_gcd(w, c);
        ModPoly fac = w.divmod(y).first;
        if (!is_one(fac)) out.emplace_back(fac, i * mult);
        w = y;
        c = c.divmod(y).first;
        ++i;
    }
    if (!is_one(c))
        squarefree_decompose(pth_root(c), mult * static_cast<int>(c.modulus().get_ui()), out);
}

ModPoly x_poly(const Integer& q) { return ModPoly::monomial_x(1, q); }

ModPoly random_poly(int max_deg, const Integer& q, gmp_randclass& rng) {
    std::vector<Integer> v;
    for (int i = 0; i <= max_deg; ++i) v.push_back(rng.get_z_range(q));
    return ModPoly(std::move(v), q);
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map for q = 2).
void edf(const ModPoly& g, int d, gmp_randclass& rng, std::vector<ModPoly>& out) {
    const Integer& q = g.modulus();
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    for (;;) {
        ModPoly h = random_poly(g.degree() - 1, q, rng);
        if (h.degree() < 1) continue;
        ModPoly t;
        if (q == 2) {
            t = h % g;
            ModPoly acc = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % g;
                acc = acc + t;
            }
            t = acc;
        } else {
            Integer e = (pow_i(q, static_cast<unsigned long>(d)) - 1) / 2;
            t = h.pow_mod(e, g) - ModPoly::constant(1, q);
        }
        ModPoly u = mod_gcd(t, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            edf(u, d, rng, out);
            edf(g.divmod(u).first, d, rng, out);
            return;
        }
    }
}

// Distinct-degree decomposition of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> ddf(const ModPoly& f) {
    const Integer& q = f.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly k = f;
    ModPoly h = x_poly(q) % k;
    int d = 0;
    while (k.degree() >= 2 * (d + 1)) {
        ++d;
        h = h.pow_mod(q, k);
        ModPoly g = mod_gcd(h - x_poly(q), k);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            k = k.divmod(g).first;
            h = h % k;
        }
    }
    if (k.degree() > 0) out.emplace_back(k, k.degree());
    return out;
}

bool poly_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

} // namespace

ModFactorization factor_mod_q(const IntPoly& f, const Integer& q) {
    if (f.is_zero()) throw error("factor_mod_q: zero polynomial");
    if (mpz_divisible_p(f.lc().get_mpz_t(), q.get_mpz_t()))
        throw leading_coefficient_vanishes("leading coefficient of " + f.str() +
                                           " vanishes mod " + to_string(q));
    ModFactorization out;
    out.modulus = q;
    ModPoly fm = ModPoly::from_int(f, q);
    out.lc = fm.lc();
    fm = fm.monic();
    if (fm.degree() == 0) return out;

    // reproducible equal-degree splitting
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(Integer(12345) + q);

    std::vector<std::pair<ModPoly, int>> sqf;
    squarefree_decompose(fm, 1, sqf);

    std::vector<std::pair<ModPoly, int>> collected;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : ddf(part.monic())) {
            std::vector<ModPoly> irreducibles;
            edf(block, d, rng, irreducibles);
            for (auto& irr : irreducibles) collected.emplace_back(irr, mult);
        }
    }
    std::sort(collected.begin(), collected.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    out.factors = std::move(collected);
    return out;
}

bool splits_linearly_mod(const IntPoly& f, const Integer& q) {
    if (f.is_zero()) throw error("splits_linearly_mod: zero polynomial");
    if (mpz_divisible_p(f.lc().get_mpz_t(), q.get_mpz_t()))
        throw leading_coefficient_vanishes("leading coefficient vanishes mod " + to_string(q));
    ModPoly fm = ModPoly::from_int(f, q).monic();
    if (fm.degree() == 0) return false;
    std::vector<std::pair<ModPoly, int>> sqf;
    squarefree_decompose(fm, 1, sqf);
    // all factors linear <=> every squarefree component divides X^q - X
    for (const auto& [part, mult] : sqf) {
        (void)mult;
        ModPoly frob = x_poly(q).pow_mod(q, part);
        if (!(frob == x_poly(q) % part)) return false;
    }
    return true;
}

std::vector<Integer> roots_mod_prime(const IntPoly& f, const Integer& q) {
    ModPoly fm = ModPoly::from_int(f, q);
    if (fm.is_zero()) throw error("roots_mod_prime: polynomial vanishes mod q");
    fm = fm.monic();
    if (fm.degree() == 0) return {};
    // product of distinct linear factors: gcd(X^q - X, f)
    ModPoly frob = x_poly(q).pow_mod(q, fm);
    ModPoly lin = mod_gcd(frob - x_poly(q), fm);
    std::vector<Integer> roots;
    if (lin.degree() <= 0) return roots;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(Integer(98765) + q);
    std::vector<ModPoly> linear_factors;
    edf(lin, 1, rng, linear_factors);
    for (const auto& lf : linear_factors)
        roots.push_back(floor_mod(-lf.coeff(0), q));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace classforge
