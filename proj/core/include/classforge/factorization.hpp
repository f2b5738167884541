#ifndef CLASSFORGE_FACTORIZATION_HPP
#define CLASSFORGE_FACTORIZATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "classforge/numeric.hpp"

namespace classforge {

/// Complete factorization of a nonzero integer: sign * prod p_i^e_i with the
/// primes strictly increasing and every p_i certified by is_prime.
struct PrimeFactorization {
    int unit = 1; // +1 or -1
    std::vector<std::pair<Integer, unsigned>> factors;

    Integer value() const;
    unsigned valuation(const Integer& p) const;
    bool operator==(const PrimeFactorization&) const = default;
};

inline constexpr std::uint64_t default_factor_budget = 20'000'000;

/// Factors m != 0 by trial division over primes below 100000 followed by
/// Brent-cycle Pollard rho.  The budget bounds the total number of rho
/// iterations; when it runs out a factorization_timeout is thrown rather than
/// returning composite cofactors.
PrimeFactorization factorize(const Integer& m, std::uint64_t budget = default_factor_budget);

} // namespace classforge

#endif
