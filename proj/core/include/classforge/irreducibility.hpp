#ifndef CLASSFORGE_IRREDUCIBILITY_HPP
#define CLASSFORGE_IRREDUCIBILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "classforge/poly.hpp"

namespace classforge {

/// Checkable evidence that a polynomial is irreducible over Q.
struct IrreducibilityEvidence {
    enum class Kind { mod_prime, eisenstein_shift, degree_sets };
    Kind kind;
    Integer prime;               // the witness prime (mod_prime / eisenstein_shift)
    Integer shift;               // eisenstein_shift: f(X + shift) is Eisenstein at prime
    std::vector<Integer> primes; // degree_sets: no common proper factor degree mod these
    bool operator==(const IrreducibilityEvidence&) const = default;
};

struct IrreducibilityVerdict {
    enum class Status { irreducible, reducible, unknown };
    Status status = Status::unknown;
    std::optional<IrreducibilityEvidence> evidence; // when irreducible
    std::optional<IntPoly> factor;                  // a proper factor, when reducible
};

/// Eisenstein criterion at p: p does not divide lc, p divides every other
/// coefficient and p^2 does not divide the constant term.
bool eisenstein_check(const IntPoly& f, const Integer& p);

/// One-sided irreducibility test over Q for primitive f of degree >= 1.
/// Never lies: Irreducible always carries recheckable evidence, Reducible an
/// exact factor, and Unknown is returned whenever neither could be established
/// within the (bounded) effort.
IrreducibilityVerdict irreducibility_over_Q(const IntPoly& f);

/// Re-validates a piece of evidence against f.
bool recheck_evidence(const IntPoly& f, const IrreducibilityEvidence& e);

} // namespace classforge

#endif
