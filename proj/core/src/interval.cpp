#include "classforge/interval.hpp"

#include <algorithm>

namespace classforge {

RealInterval::RealInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw error("inverted interval");
}

int RealInterval::definite_sign() const {
    if (sign(lo) > 0) return 1;
    if (sign(hi) < 0) return -1;
    return 0;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
    return {lo + o.lo, hi + o.hi};
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    return {lo - o.hi, hi - o.lo};
}

RealInterval RealInterval::operator-() const { return {-hi, -lo}; }

RealInterval RealInterval::operator*(const RealInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
    if (o.contains_zero())
        throw precision_exhausted("interval division by an interval containing 0");
    Rational a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RealInterval RealInterval::abs() const {
    if (sign(lo) >= 0) return *this;
    if (sign(hi) <= 0) return -*this;
    return {Rational(0), std::max(Rational(-lo), hi)};
}

RealInterval RealInterval::square() const {
    RealInterval a = abs();
    return {a.lo * a.lo, a.hi * a.hi};
}

Rational dyadic_round(const Rational& x, unsigned bits, bool round_up) {
    if (sign(x) == 0) return x;
    long e = static_cast<long>(bit_length(numerator(x))) -
             static_cast<long>(bit_length(denominator(x)));
    long shift = static_cast<long>(bits) - e;
    if (shift <= 0) shift = 1;
    Integer scale = pow_i(2, static_cast<unsigned long>(shift));
    Rational scaled = x * Rational(scale);
    Integer m = round_up ? ceil_q(scaled) : floor_q(scaled);
    return make_rational(m, scale);
}

namespace {

// atanh(t) enclosure for |t| <= 1/2 via the odd series with a tail bound.
RealInterval atanh_enclosure(const Rational& t, unsigned terms) {
    Rational t2 = t * t;
    if (t2 >= Rational(1, 4) + Rational(1, 4)) // |t| >= ~0.707 would break the tail bound
        throw precision_exhausted("atanh argument out of range");
    Rational term = t;
    Rational sum = 0;
    for (unsigned j = 0; j < terms; ++j) {
        sum += term / Rational(2 * j + 1);
        term *= t2;
    }
    // |R| <= |t|^(2N+1) / ((2N+1)(1 - t^2))
    Rational tail = abs_q(term) / (Rational(2 * terms + 1) * (Rational(1) - t2));
    return {sum - tail, sum + tail};
}

const RealInterval& ln2_enclosure() {
    static const RealInterval v = [] {
        RealInterval a = atanh_enclosure(Rational(1, 3), 96);
        return RealInterval{2 * a.lo, 2 * a.hi};
    }();
    return v;
}

// ln of a single positive rational point, outward-rounded.
RealInterval ln_point(const Rational& x, unsigned terms, unsigned bits) {
    if (sign(x) <= 0) throw precision_exhausted("log of nonpositive value");
    // reduce x = m * 2^k with m in [2/3, 4/3]
    Rational m = x;
    long k = 0;
    const Rational lo_bound(2, 3), hi_bound(4, 3);
    while (m > hi_bound) { m /= 2; ++k; }
    while (m < lo_bound) { m *= 2; --k; }
    Rational t = (m - 1) / (m + 1); // |t| <= 1/5
    // pre-round to keep series arithmetic cheap: atanh is increasing
    Rational t_lo = dyadic_round(t, bits, false);
    Rational t_hi = dyadic_round(t, bits, true);
    RealInterval a_lo = atanh_enclosure(t_lo, terms);
    RealInterval a_hi = atanh_enclosure(t_hi, terms);
    RealInterval lnm{2 * a_lo.lo, 2 * a_hi.hi};
    const RealInterval& l2 = ln2_enclosure();
    RealInterval kl2 = RealInterval::point(Rational(k)) * l2;
    return lnm + kl2;
}

} // namespace

RealInterval log_interval(const RealInterval& x, unsigned terms, unsigned bits) {
    if (sign(x.lo) <= 0)
        throw precision_exhausted("log over an interval touching 0");
    RealInterval a = ln_point(x.lo, terms, bits);
    RealInterval b = ln_point(x.hi, terms, bits);
    return {a.lo, b.hi};
}

RealInterval sqrt_interval(const Integer& D, unsigned bits) {
    if (sign(D) <= 0) throw error("sqrt_interval: D must be positive");
    Integer r = isqrt(D);
    if (r * r == D) return RealInterval::point(Rational(r));
    Rational lo(r), hi(r + 1);
    Rational width = make_rational(1, pow_i(2, bits));
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= Rational(D)) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

} // namespace classforge
