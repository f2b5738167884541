#ifndef CLASSFORGE_CERTIFICATE_HPP
#define CLASSFORGE_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "classforge/family.hpp"
#include "classforge/irreducibility.hpp"
#include "classforge/residue_symbol.hpp"

namespace classforge {

/// A prime ell | y with the distinguished root of f_n mod ell and its ideal
/// exponent r * v_ell(y).
struct IdealFactorCert {
    Integer ell;
    Integer root;     // f_n(root) = 0 (mod ell), root = special point (mod ell)
    Integer exponent; // r * v_ell(y)
    bool operator==(const IdealFactorCert&) const = default;
};

/// One symbol evaluation transcript for a Bauer witness prime.
struct BauerWitness {
    Integer p;    // the prime divisor of r this witness serves
    int slot;     // 1..2 (Galois families) or 1..3 (cubic), fixing the condition set
    Integer ell;  // the witness prime, ell = 1 (mod p)
    std::vector<std::pair<Integer, Symbol>> transcript;
    bool operator==(const BauerWitness&) const = default;
};

/// Degree-1 residue-field evidence that the target element is not a p-th power:
/// its image mod (ell, rho - root) is a p-th power nonresidue.
struct NonPowerEvidence {
    Integer p;
    Integer ell;   // ell = 1 (mod p), not dividing disc numerator
    Integer root;  // f_n(root) = 0 (mod ell)
    Integer value; // image of the target element in F_ell
    bool operator==(const NonPowerEvidence&) const = default;
};

/// Optional recheckable irreducibility evidence for p_{n,r}.
struct PnrEvidence {
    IrreducibilityEvidence evidence;
    bool operator==(const PnrEvidence&) const = default;
};

struct RamifiedData {
    Integer q;
    Integer n0; // residue with n = n0 (mod q^2) targeted by the construction
    bool operator==(const RamifiedData&) const = default;
};

/// Full witness bundle; validity re-establishes the sufficient conditions
/// for an ideal class of order exactly r.
struct ClassOrderCertificate {
    FamilyId family = FamilyId::quartic;
    Integer r, n, y;
    std::optional<Integer> c_r;
    std::vector<BauerWitness> bauer_witnesses;   // sorted by (p, slot)
    std::vector<IdealFactorCert> ideal_factors;  // sorted by ell
    std::vector<NonPowerEvidence> nonpower_evidence; // sorted by p
    std::vector<PnrEvidence> pnr_evidence;       // optional attachments
    std::optional<RamifiedData> ramified;
    std::string version = "1";

    bool operator==(const ClassOrderCertificate&) const = default;
};

struct Verdict {
    bool valid = false;
    std::string reason; // first failing check when invalid
    static Verdict ok() { return {true, ""}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

/// The residue-condition table for a family and witness slot: pairs of
/// (base, required symbol).
const std::vector<std::pair<Integer, Symbol>>& witness_conditions(FamilyId family, int slot);
int witness_slot_count(FamilyId family);

/// Prop 2.2 / its quartic analogue / Prop 4.2: y^r equals the special value,
/// y avoids the excluded primes, and every prime of y carries a valid
/// degree-splitting certificate with exponent r * v_ell(y).
Verdict verify_ideal_power(const ClassOrderCertificate& cert);

/// Per prime p | r, re-evaluates every required residue symbol at the witness
/// primes and confirms they divide the special value via y's factorization.
Verdict verify_residue_conditions(const ClassOrderCertificate& cert);

/// Per prime p | r (Galois families), recomputes the target element's image in
/// the degree-1 residue field and confirms it is a p-th power nonresidue.
Verdict verify_nonpower(const ClassOrderCertificate& cert);

/// Conjunction of all checks plus the family constraint on r, subfield-norm
/// triviality of w, and (when present) the ramification of q.
Verdict verify_certificate(const ClassOrderCertificate& cert);

/// Canonical serialization: single-line JSON, keys sorted, all integers as
/// decimal strings.  parse(serialize(c)) == c; unknown fields are rejected.
std::string serialize(const ClassOrderCertificate& cert);
ClassOrderCertificate parse_certificate(const std::string& text); // throws malformed_certificate

} // namespace classforge

#endif
