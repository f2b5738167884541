#ifndef CLASSFORGE_PELL_HPP
#define CLASSFORGE_PELL_HPP

#include "classforge/interval.hpp"

namespace classforge {

/// A unit (x + y sqrt(D)) / (half ? 2 : 1) of the quadratic order Z[sqrt(D)]
/// (or Z[(1+sqrt(D))/2] when D = 1 mod 4), with unit > 1 and
/// x^2 - D y^2 = 4*norm (half) or norm (integral), norm in {+1, -1}.
struct QuadraticUnit {
    Integer x, y, D;
    bool half = false;
    Integer norm; // +1 or -1

    /// x^2 - D y^2, equal to norm (integral case) or 4*norm (half case).
    Integer norm_equation_value() const { return x * x - D * y * y; }
};

/// Fundamental solution via the continued-fraction expansion of sqrt(D)
/// (or of (1+sqrt(D))/2 when D = 1 mod 4).  Throws perfect_square when D is
/// a square.  The returned unit generates the unit group of the corresponding
/// order up to sign; it may be a power of the maximal-order fundamental unit,
/// which is all the regulator-positivity arguments need.
QuadraticUnit pell_fundamental_unit(const Integer& D);

/// Rigorous enclosure of the unit's real value (always > 1).
RealInterval unit_interval(const QuadraticUnit& u, unsigned bits = 96);

} // namespace classforge

#endif
