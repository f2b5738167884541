#ifndef CLASSFORGE_MOD_FACTOR_HPP
#define CLASSFORGE_MOD_FACTOR_HPP

#include <utility>
#include <vector>

#include "classforge/poly.hpp"

namespace classforge {

/// Degrees and multiplicities of the irreducible factors of a ModPoly, sorted
/// by (degree, multiplicity).  Sum of degree*multiplicity equals the total degree.
struct FactorPattern {
    std::vector<std::pair<int, int>> entries;
    bool all_linear() const;
    bool operator==(const FactorPattern&) const = default;
};

/// Complete factorization of f mod q into monic irreducibles with multiplicities.
struct ModFactorization {
    Integer modulus;
    Integer lc;                                 // unit factor in F_q
    std::vector<std::pair<ModPoly, int>> factors; // monic irreducible, multiplicity
    FactorPattern pattern() const;
    ModPoly product() const;                    // lc * prod factors^mult
};

/// Squarefree decomposition + distinct-degree + Cantor-Zassenhaus equal-degree
/// splitting over F_q, q prime.  Throws leading_coefficient_vanishes when q | lc(f).
ModFactorization factor_mod_q(const IntPoly& f, const Integer& q);

/// True iff every irreducible factor of f mod q is linear.
bool splits_linearly_mod(const IntPoly& f, const Integer& q);

/// Distinct roots of f mod q.
std::vector<Integer> roots_mod_prime(const IntPoly& f, const Integer& q);

} // namespace classforge

#endif
