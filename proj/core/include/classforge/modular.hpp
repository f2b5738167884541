#ifndef CLASSFORGE_MODULAR_HPP
#define CLASSFORGE_MODULAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "classforge/numeric.hpp"

namespace classforge {

/// A residue class: 0 <= value < modulus, modulus >= 2.
struct ResidueClass {
    Integer value;
    Integer modulus;

    bool operator==(const ResidueClass&) const = default;
};

/// base^exp mod modulus, exp >= 0, modulus >= 2.
ResidueClass mod_pow(const Integer& base, const Integer& exp, const Integer& modulus);

/// Inverse of a modulo modulus; throws not_invertible when gcd(a, modulus) != 1.
ResidueClass inv_mod(const Integer& a, const Integer& modulus);

/// Solves a system of simultaneous congruences x = r_i (mod m_i).  Moduli need
/// not be pairwise coprime; the result lives modulo lcm(m_i).  Throws
/// moduli_not_coprime when the system is inconsistent on a shared factor.
ResidueClass crt(const std::vector<std::pair<Integer, Integer>>& pairs);

/// Square root of a modulo an odd prime p (Tonelli-Shanks), normalized to the
/// smaller of the two roots.  Empty when a is a non-residue.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

} // namespace classforge

#endif
