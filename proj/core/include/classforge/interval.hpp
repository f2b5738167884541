#ifndef CLASSFORGE_INTERVAL_HPP
#define CLASSFORGE_INTERVAL_HPP

#include "classforge/numeric.hpp"

namespace classforge {

/// Closed interval with rational endpoints.  Every operation returns an
/// enclosure of the exact image, so derived signs are proof-grade.
struct RealInterval {
    Rational lo, hi;

    RealInterval() : lo(0), hi(0) {}
    RealInterval(Rational l, Rational h);
    static RealInterval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    /// -1, +1 when sign-definite; 0 when the interval straddles or touches 0.
    int definite_sign() const;

    RealInterval operator+(const RealInterval& o) const;
    RealInterval operator-(const RealInterval& o) const;
    RealInterval operator-() const;
    RealInterval operator*(const RealInterval& o) const;
    /// Throws precision_exhausted when the divisor straddles 0.
    RealInterval operator/(const RealInterval& o) const;
    RealInterval abs() const;
    RealInterval square() const;
};

/// Outward dyadic rounding to roughly `bits` significant bits.
Rational dyadic_round(const Rational& x, unsigned bits, bool round_up);

/// Enclosure of ln over a positive interval.  `terms` controls the atanh
/// series length; the truncation remainder is bounded rationally and added
/// outward.  Throws precision_exhausted if the input touches 0.
RealInterval log_interval(const RealInterval& x, unsigned terms = 32, unsigned bits = 256);

/// Enclosure of sqrt(D) for nonsquare D > 0, to the requested dyadic width 2^-bits.
RealInterval sqrt_interval(const Integer& D, unsigned bits = 96);

} // namespace classforge

#endif
