#ifndef CLASSFORGE_STURM_HPP
#define CLASSFORGE_STURM_HPP

#include <vector>

#include "classforge/poly.hpp"

namespace classforge {

/// Open interval (lo, hi) containing exactly one real root of the polynomial
/// it was produced for.
struct IsolatingInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
};

/// The Sturm chain of f (with signed-primitive integer scaling per entry).
class SturmChain {
public:
    explicit SturmChain(const RatPoly& f);

    /// Sign variations at x.
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Number of distinct real roots in (lo, hi].
    int count_roots(const Rational& lo, const Rational& hi) const;
    int count_real_roots() const;

private:
    std::vector<IntPoly> chain_;
};

/// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const RatPoly& f);

/// Isolating intervals for all real roots of a squarefree polynomial, sorted
/// ascending; endpoints are never roots.  Throws not_squarefree when
/// gcd(f, f') is nonconstant.
std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& f);

/// Shrinks an isolating interval below the requested width by sign bisection.
/// Requires f(lo) and f(hi) to have opposite signs.
IsolatingInterval refine_interval(const RatPoly& f, IsolatingInterval iv, const Rational& width);

} // namespace classforge

#endif
