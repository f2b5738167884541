#include "classforge/resultant.hpp"

namespace classforge {

namespace {

Integer int_pow(const Integer& a, int e) { return pow_i(a, static_cast<unsigned long>(e)); }

// Exact polynomial division by an integer scalar is guaranteed by subresultant
// theory at each step; divexact throws if that ever fails.
IntPoly div_scalar(const IntPoly& f, const Integer& c) { return f.divexact_scalar(c); }

} // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    IntPoly A = f, B = g;
    int s1 = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s1 = -1;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        if (A.degree() == 0) return 1;
        return Integer(s1) * int_pow(B.lc(), A.degree());
    }

    Integer a = A.content(), b = B.content();
    A = div_scalar(A, a);
    B = div_scalar(B, b);
    Integer g1 = 1, h = 1;
    int s = s1;
    Integer t = int_pow(a, B.degree()) * int_pow(b, A.degree());

    while (B.degree() > 0) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = A.pseudo_rem(B);
        A = B;
        B = R.is_zero() ? R : div_scalar(R, g1 * int_pow(h, delta));
        g1 = A.lc();
        if (delta > 0) h = divexact(int_pow(g1, delta), int_pow(h, delta - 1));
        if (B.is_zero()) return 0;
    }
    Integer res = divexact(int_pow(B.lc(), A.degree()), int_pow(h, A.degree() - 1));
    return Integer(s) * t * res;
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    auto [df, F] = f.clear_denominators();
    auto [dg, G] = g.clear_denominators();
    Integer num = resultant(F, G);
    Integer den = pow_i(df, static_cast<unsigned long>(g.degree())) *
                  pow_i(dg, static_cast<unsigned long>(f.degree()));
    return make_rational(num, den);
}

Rational discriminant(const RatPoly& f) {
    int d = f.degree();
    if (d < 2) throw error("discriminant: degree must be >= 2");
    Rational res = resultant(f, f.derivative());
    Rational disc = res / f.lc();
    if (((d * (d - 1)) / 2) % 2 != 0) disc = -disc;
    return disc;
}

Rational discriminant(const IntPoly& f) {
    return discriminant(RatPoly::from_int(f));
}

} // namespace classforge
