#include "classforge/irreducibility.hpp"

#include <algorithm>
#include <set>

#include "classforge/factorization.hpp"
#include "classforge/mod_factor.hpp"
#include "classforge/primality.hpp"
#include "classforge/resultant.hpp"

namespace classforge {

bool eisenstein_check(const IntPoly& f, const Integer& p) {
    if (f.degree() < 1) throw error("eisenstein_check: constant polynomial");
    if (mpz_divisible_p(f.lc().get_mpz_t(), p.get_mpz_t())) return false;
    for (int i = 0; i < f.degree(); ++i)
        if (!mpz_divisible_p(f.coeff(i).get_mpz_t(), p.get_mpz_t())) return false;
    Integer p2 = p * p;
    return !mpz_divisible_p(f.coeff(0).get_mpz_t(), p2.get_mpz_t());
}

namespace {

// Achievable proper factor degrees given the multiset of irreducible factor
// degrees mod one prime: all subset sums strictly between 0 and deg f.
std::set<int> proper_degree_sums(const FactorPattern& pat, int total) {
    std::vector<bool> reach(total + 1, false);
    reach[0] = true;
    for (const auto& [d, m] : pat.entries)
        for (int k = 0; k < m; ++k)
            for (int s = total - d; s >= 0; --s)
                if (reach[s]) reach[s + d] = true;
    std::set<int> out;
    for (int s = 1; s < total; ++s)
        if (reach[s]) out.insert(s);
    return out;
}

// Rational root search: candidate roots a/b with a | c0, b | lc.  Only attempted
// when the two ends factor within a small budget.
std::optional<IntPoly> linear_factor(const IntPoly& f) {
    if (sign(f.coeff(0)) == 0) return IntPoly({Integer(0), Integer(1)}); // X | f
    PrimeFactorization fc0, flc;
    try {
        fc0 = factorize(f.coeff(0), 200000);
        flc = factorize(f.lc(), 200000);
    } catch (const factorization_timeout&) {
        return std::nullopt;
    }
    std::vector<Integer> divs_a{1}, divs_b{1};
    auto expand = [](std::vector<Integer>& divs, const PrimeFactorization& fac) {
        for (const auto& [p, e] : fac.factors) {
            size_t base = divs.size();
            Integer pk = 1;
            for (unsigned k = 1; k <= e; ++k) {
                pk *= p;
                for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
            }
        }
    };
    expand(divs_a, fc0);
    expand(divs_b, flc);
    if (divs_a.size() * divs_b.size() > 4096) return std::nullopt;
    RatPoly rf = RatPoly::from_int(f);
    for (const auto& a : divs_a)
        for (const auto& b : divs_b) {
            if (gcd(a, b) != 1) continue;
            for (int s : {1, -1}) {
                Rational root = make_rational(s * a, b);
                if (sign(rf.eval(root)) == 0)
                    return IntPoly({-s * a, b}); // bX - sa
            }
        }
    return std::nullopt;
}

} // namespace

IrreducibilityVerdict irreducibility_over_Q(const IntPoly& f) {
    IrreducibilityVerdict v;
    if (f.degree() < 1) throw error("irreducibility_over_Q: degree must be >= 1");
    if (f.degree() == 1) {
        v.status = IrreducibilityVerdict::Status::irreducible;
        v.evidence = IrreducibilityEvidence{IrreducibilityEvidence::Kind::degree_sets, 0, 0, {}};
        return v;
    }

    if (auto lf = linear_factor(f)) {
        v.status = IrreducibilityVerdict::Status::reducible;
        v.factor = *lf;
        return v;
    }
    RatPoly rf = RatPoly::from_int(f);
    RatPoly g = poly_gcd(rf, rf.derivative());
    if (g.degree() >= 1) {
        v.status = IrreducibilityVerdict::Status::reducible;
        v.factor = g.clear_denominators().second.primitive_part();
        return v;
    }

    // modular evidence
    std::set<int> common;
    bool first = true;
    std::vector<Integer> used;
    Integer q = 2;
    int tried = 0;
    for (; tried < 12 && q < 200; q = next_prime(q)) {
        if (mpz_divisible_p(f.lc().get_mpz_t(), q.get_mpz_t())) continue;
        ++tried;
        auto fac = factor_mod_q(f, q);
        auto pat = fac.pattern();
        if (pat.entries.size() == 1 && pat.entries[0] == std::make_pair(f.degree(), 1)) {
            v.status = IrreducibilityVerdict::Status::irreducible;
            v.evidence = IrreducibilityEvidence{IrreducibilityEvidence::Kind::mod_prime, q, 0, {}};
            return v;
        }
        bool squarefree_mod = true;
        for (const auto& [d, m] : pat.entries)
            if (m > 1) squarefree_mod = false;
        if (!squarefree_mod) continue;
        used.push_back(q);
        auto sums = proper_degree_sums(pat, f.degree());
        if (first) {
            common = sums;
            first = false;
        } else {
            std::set<int> inter;
            std::set_intersection(common.begin(), common.end(), sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            common = inter;
        }
        if (!first && common.empty()) {
            v.status = IrreducibilityVerdict::Status::irreducible;
            v.evidence = IrreducibilityEvidence{IrreducibilityEvidence::Kind::degree_sets, 0, 0, used};
            return v;
        }
    }

    // Eisenstein after a small shift
    for (long c = -4; c <= 4; ++c) {
        IntPoly shifted = f.shift(Integer(c));
        std::set<Integer> candidates;
        for (Integer p = 2; p < 100; p = next_prime(p)) candidates.insert(p);
        try {
            auto fac = factorize(shifted.coeff(0), 100000);
            for (const auto& [p, e] : fac.factors) candidates.insert(p);
        } catch (const factorization_timeout&) {
        }
        for (const auto& p : candidates) {
            if (eisenstein_check(shifted, p)) {
                v.status = IrreducibilityVerdict::Status::irreducible;
                v.evidence =
                    IrreducibilityEvidence{IrreducibilityEvidence::Kind::eisenstein_shift, p, Integer(c), {}};
                return v;
            }
        }
    }

    v.status = IrreducibilityVerdict::Status::unknown;
    return v;
}

bool recheck_evidence(const IntPoly& f, const IrreducibilityEvidence& e) {
    switch (e.kind) {
    case IrreducibilityEvidence::Kind::mod_prime: {
        if (!is_prime(e.prime)) return false;
        if (mpz_divisible_p(f.lc().get_mpz_t(), e.prime.get_mpz_t())) return false;
        auto pat = factor_mod_q(f, e.prime).pattern();
        return pat.entries.size() == 1 && pat.entries[0] == std::make_pair(f.degree(), 1);
    }
    case IrreducibilityEvidence::Kind::eisenstein_shift: {
        if (!is_prime(e.prime)) return false;
        return eisenstein_check(f.shift(e.shift), e.prime);
    }
    case IrreducibilityEvidence::Kind::degree_sets: {
        if (f.degree() == 1) return true;
        std::set<int> common;
        bool first = true;
        for (const auto& q : e.primes) {
            if (!is_prime(q)) return false;
            auto pat = factor_mod_q(f, q).pattern();
            for (const auto& [d, m] : pat.entries)
                if (m > 1) return false;
            auto sums = proper_degree_sums(pat, f.degree());
            if (first) {
                common = sums;
                first = false;
            } else {
                std::set<int> inter;
                std::set_intersection(common.begin(), common.end(), sums.begin(), sums.end(),
                                      std::inserter(inter, inter.begin()));
                common = inter;
            }
        }
        return !first && common.empty();
    }
    }
    return false;
}

} // namespace classforge
