#include "classforge/sturm.hpp"

#include <algorithm>

namespace classforge {

namespace {

// Scale a rational polynomial to a primitive integer polynomial with the same
// sign behaviour (multiplication by a positive rational).
IntPoly signed_primitive(const RatPoly& f) {
    if (f.is_zero()) return {};
    IntPoly F = f.clear_denominators().second; // scaled by a positive integer
    Integer c = F.content();
    return F.divexact_scalar(c); // content > 0, sign preserved
}

int sign_at(const IntPoly& f, const Rational& x) {
    // sign of f(num/den) = sign of sum f_i num^i den^(deg-i)
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0;
    int d = f.degree();
    Integer den_pow = 1;
    // Horner in num with denominator powers folded in
    for (int i = d; i >= 0; --i) {
        acc = acc * num + f.coeff(i) * den_pow;
        if (i > 0) den_pow *= den;
    }
    return sign(acc);
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

SturmChain::SturmChain(const RatPoly& f) {
    RatPoly p0 = f, p1 = f.derivative();
    while (!p0.is_zero()) {
        chain_.push_back(signed_primitive(p0));
        if (p1.is_zero()) break;
        RatPoly r = p0 % p1;
        p0 = p1;
        p1 = -r;
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign_at(p, x));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
        int s = p.is_zero() ? 0 : sign(p.lc());
        if (p.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sign(p.lc()));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_real_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

Rational root_bound(const RatPoly& f) {
    if (f.degree() < 1) return Rational(1);
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rational a = abs_q(f.coeff(i) / f.lc());
        if (a > m) m = a;
    }
    return m + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& f) {
    if (f.degree() < 1) return {};
    if (poly_gcd(f, f.derivative()).degree() >= 1)
        throw not_squarefree("isolate_real_roots requires a squarefree input");
    SturmChain chain(f);
    Rational B = root_bound(f);
    // push the bound out until the endpoints are certainly not roots
    while (sign(f.eval(-B)) == 0 || sign(f.eval(B)) == 0) B += 1;

    std::vector<IsolatingInterval> out;
    std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int c = chain.count_roots(lo, hi);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back({lo, hi});
            continue;
        }
        Rational mid = (lo + hi) / 2;
        // nudge the cut off any root
        Rational step = (hi - lo) / 64;
        while (sign(f.eval(mid)) == 0) mid += step;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

IsolatingInterval refine_interval(const RatPoly& f, IsolatingInterval iv, const Rational& width) {
    int slo = sign(f.eval(iv.lo));
    int shi = sign(f.eval(iv.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw error("refine_interval: endpoints must straddle a sign change");
    while (iv.width() > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int sm = sign(f.eval(mid));
        if (sm == 0) {
            // exact rational root hit; shrink asymmetrically around it
            Rational eps = iv.width() / 4;
            if (eps > width / 2) eps = width / 2;
            iv = {mid - eps, mid + eps};
            break;
        }
        if (sm == slo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

} // namespace classforge
