#ifndef CLASSFORGE_SEARCH_HPP
#define CLASSFORGE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classforge/certificate.hpp"
#include "classforge/factorization.hpp"

namespace classforge {

/// One required symbol value at a candidate witness prime.
struct ResidueCondition {
    Integer base;
    Symbol want;
};

struct SearchConfig {
    Integer scan_bound = 2000000;  // prime scans (Bauer, nonpower evidence, q)
    long m_max = 512;              // Hilbert-substitute iteration range
    std::uint64_t factor_budget = default_factor_budget;
    int precision_budget = 6;
    int jobs = 1;
};

/// key=value format, one per line; '#' starts a comment.  Keys: scan_bound,
/// m_max, factor_budget, precision_budget.
SearchConfig parse_config_file(const std::string& path);
void apply_config_entry(SearchConfig& cfg, const std::string& key, const std::string& value);

/// Smallest prime ell = 1 (mod p), ell > floor, not in avoid, realizing all
/// conditions; the returned transcript re-evaluates under
/// power_residue_symbol.  Throws bound_exhausted past the bound.
BauerWitness find_bauer_prime(const Integer& p, const std::vector<ResidueCondition>& conditions,
                              const std::vector<Integer>& avoid, const Integer& floor_value,
                              const Integer& bound);

struct CrResult {
    Integer c_r;
    Integer s; // the congruence-steering cofactor
    std::vector<BauerWitness> witnesses;
};

/// Assembles c_r = s * prod_{p | r} ell_1(p) ell_2(p) with the family's
/// congruence target: c_r^r = 7^(1-r) (mod 30), (c_r, 210q) = 1 for the
/// sextic; c_r = 1 (mod 6), (c_r, 5q) = 1 for the quartic.  Pass q = 1 when
/// no ramified prime is targeted.
CrResult build_cr(FamilyId family, const Integer& r, const Integer& q, const SearchConfig& cfg);

struct YN {
    Integer y, n;
    Integer d; // the mod-240 steering factor (sextic; 1 otherwise)
};

/// The y-construction of the existence proofs.  Sextic:
/// y = d c_r (30(y0+8q^2 m)-143) with d = 5/(c_r(30 y0-143)) (mod 8),
/// d = 1 (mod 30 q^2); quartic: y = c_r(30(y0+q^2 m)-1); cubic: y is the
/// assembled witness product (c_r argument), squared if y^r = 3 (mod 4).
/// Guarantees y^r = special_value(n) exactly; throws congruence_violated when
/// the excluded prime divides y at this m (the caller advances m).
YN construct_y_n(FamilyId family, const Integer& r, const Integer& c_r, const Integer& y0,
                 const Integer& q, const Integer& m);

struct RamifiedSetup {
    Integer n0, b0, y0;
};

/// Finds n0 with n0^2 + D = 0 (mod q), not (mod q^2); Hensel-lifts an r-th
/// root b0 of the special value at n0 mod q^2; solves for y0.  Requires
/// script_P(family, r) to split into linear factors mod q.
RamifiedSetup ramified_prime_setup(FamilyId family, const Integer& r, const Integer& q,
                                   const Integer& c_r);

/// Smallest admissible prime q <= bound with script_P splitting linearly mod q.
Integer find_splitting_prime(FamilyId family, const Integer& r, const Integer& bound);

/// End-to-end witness construction; every emitted certificate has already
/// passed verify_certificate.  Throws search_exhausted when the budget ends.
ClassOrderCertificate run_search(FamilyId family, const Integer& r,
                                 const SearchConfig& cfg = SearchConfig{},
                                 std::optional<Integer> ramified_q = std::nullopt);

} // namespace classforge

#endif
