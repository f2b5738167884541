#include "classforge/pell.hpp"

namespace classforge {

namespace {

// floor((P + sqrt(D)) / Q) for nonsquare D > 0, Q != 0, computed exactly.
Integer floor_quadratic(const Integer& P, const Integer& D, const Integer& Q) {
    Integer s = isqrt(D);
    Integer k = floor_div(P + s, Q);
    // verify k <= (P + sqrt(D))/Q < k+1 by sign-correct comparison with sqrt(D)
    auto cmp_sqrt = [&](const Integer& c) {
        // sign of (sqrt(D) - c)
        if (sign(c) < 0) return 1;
        Integer c2 = c * c;
        if (c2 < D) return 1;
        if (c2 > D) return -1;
        return 0;
    };
    auto value_ge = [&](const Integer& kk) {
        // (P + sqrt(D))/Q >= kk  <=>  sqrt(D) >= kk Q - P (Q > 0) or <= (Q < 0)
        Integer rhs = kk * Q - P;
        int c = cmp_sqrt(rhs);
        return sign(Q) > 0 ? c >= 0 : c <= 0;
    };
    while (!value_ge(k)) --k;
    while (value_ge(k + 1)) ++k;
    return k;
}

} // namespace

QuadraticUnit pell_fundamental_unit(const Integer& D) {
    if (D <= 0 || is_perfect_square(D))
        throw perfect_square("pell_fundamental_unit: D must be a positive nonsquare");
    bool half = (floor_mod(D, 4) == 1);
    // omega = (P0 + sqrt(D)) / Q0
    Integer P = half ? 1 : 0;
    Integer Q = half ? 2 : 1;
    // trace/norm of omega: omega^2 = tr*omega - nm
    Integer tr = half ? 1 : 0;
    Integer nm = half ? divexact(1 - D, Integer(4)) : -D;

    Integer h0 = 1, h1 = floor_quadratic(P, D, Q); // p_{-1}, p_0
    Integer k0 = 0, k1 = 1;

    Integer a = h1;
    for (int iter = 0; iter < 100000; ++iter) {
        // N(p - q*omega) = p^2 - p q tr + q^2 nm
        Integer N = h1 * h1 - h1 * k1 * tr + k1 * k1 * nm;
        if (N == 1 || N == -1) {
            QuadraticUnit u;
            u.D = D;
            u.half = half;
            u.norm = N;
            if (!half) {
                u.x = h1;
                u.y = k1;
            } else {
                // p - q*conj(omega) = p - q(1 - sqrt(D))/2 = ((2p - q) + q sqrt(D)) / 2
                u.x = 2 * h1 - k1;
                u.y = k1;
            }
            if (u.norm_equation_value() != (half ? 4 * N : N))
                throw identity_violation("pell unit fails its norm equation");
            return u;
        }
        // advance the continued fraction of (P + sqrt(D))/Q
        P = a * Q - P;
        Q = divexact(D - P * P, Q);
        a = floor_quadratic(P, D, Q);
        Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
    }
    throw error("pell_fundamental_unit: period not found (unexpected)");
}

RealInterval unit_interval(const QuadraticUnit& u, unsigned bits) {
    RealInterval s = sqrt_interval(u.D, bits);
    RealInterval v = RealInterval::point(Rational(u.x)) + RealInterval::point(Rational(u.y)) * s;
    if (u.half) v = v * RealInterval::point(Rational(1, 2));
    return v;
}

} // namespace classforge
