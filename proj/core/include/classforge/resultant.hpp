#ifndef CLASSFORGE_RESULTANT_HPP
#define CLASSFORGE_RESULTANT_HPP

#include "classforge/poly.hpp"

namespace classforge {

/// Exact resultant over Z via the subresultant pseudo-remainder sequence.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// Exact resultant over Q: denominators are cleared and divided back out.
Rational resultant(const RatPoly& f, const RatPoly& g);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), deg f >= 2.
Rational discriminant(const RatPoly& f);
Rational discriminant(const IntPoly& f);

} // namespace classforge

#endif
