#ifndef CLASSFORGE_ERRORS_HPP
#define CLASSFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace classforge {

/// Base class for all typed failures raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct not_invertible : error { using error::error; };
struct moduli_not_coprime : error { using error::error; };
struct factorization_timeout : error { using error::error; };
struct shared_factor : error { using error::error; };
struct leading_coefficient_vanishes : error { using error::error; };
struct not_squarefree : error { using error::error; };
struct inadmissible_parameter : error { using error::error; };
struct non_galois_family : error { using error::error; };
struct gcd_constraint_violated : error { using error::error; };
struct congruence_violated : error { using error::error; };
struct parity_violated : error { using error::error; };
struct perfect_square : error { using error::error; };
struct precision_exhausted : error { using error::error; };
struct label_unavailable : error { using error::error; };
struct bound_exhausted : error { using error::error; };
struct prime_inadmissible : error { using error::error; };
struct search_exhausted : error { using error::error; };
struct malformed_certificate : error { using error::error; };
struct denominator_vanishes : error { using error::error; };

/// A checked symbolic identity came out false.  These identities are theorems
/// of the underlying construction; a throw here means corrupted inputs or a bug.
struct identity_violation : error { using error::error; };

} // namespace classforge

#endif
