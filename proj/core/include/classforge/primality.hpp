#ifndef CLASSFORGE_PRIMALITY_HPP
#define CLASSFORGE_PRIMALITY_HPP

#include "classforge/numeric.hpp"

namespace classforge {

/// Miller-Rabin primality test.  Deterministic for m < 2^64 (fixed witness set
/// {2,3,5,7,11,13,17,19,23,29,31,37}); for larger m runs 40 pseudorandom bases
/// drawn from a generator seeded by m itself, so the answer is reproducible and
/// the error probability is below 4^-40.
bool is_prime(const Integer& m);

/// Smallest prime strictly greater than m.
Integer next_prime(const Integer& m);

} // namespace classforge

#endif
