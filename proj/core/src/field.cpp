#include "classforge/field.hpp"

#include "classforge/modular.hpp"
#include "classforge/resultant.hpp"

namespace classforge {

std::string to_string(FamilyId f) {
    switch (f) {
    case FamilyId::sextic: return "sextic";
    case FamilyId::quartic: return "quartic";
    case FamilyId::cubic: return "cubic";
    }
    return "?";
}

FamilyId family_from_string(const std::string& s) {
    if (s == "sextic") return FamilyId::sextic;
    if (s == "quartic") return FamilyId::quartic;
    if (s == "cubic") return FamilyId::cubic;
    throw error("unknown family: " + s);
}

int family_degree(FamilyId f) {
    switch (f) {
    case FamilyId::sextic: return 6;
    case FamilyId::quartic: return 4;
    case FamilyId::cubic: return 3;
    }
    return 0;
}

FieldElement::FieldElement(InstancePtr inst, RatPoly rep)
    : inst_(std::move(inst)), rep_(std::move(rep)) {
    if (!inst_) throw error("FieldElement without instance");
    if (rep_.degree() >= inst_->f.degree()) rep_ = rep_ % inst_->f;
}

FieldElement FieldElement::zero(InstancePtr inst) { return {std::move(inst), RatPoly()}; }
FieldElement FieldElement::one(InstancePtr inst) { return {std::move(inst), RatPoly::constant(1)}; }

FieldElement FieldElement::from_rational(InstancePtr inst, const Rational& c) {
    return {std::move(inst), RatPoly::constant(c)};
}

FieldElement FieldElement::generator(InstancePtr inst) {
    return {std::move(inst), RatPoly::monomial(1, 1)};
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return {inst_, rep_ + o.rep_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return {inst_, rep_ - o.rep_};
}

FieldElement FieldElement::operator-() const { return {inst_, -rep_}; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return {inst_, (rep_ * o.rep_) % inst_->f};
}

FieldElement FieldElement::inverse() const {
    if (rep_.is_zero()) throw not_invertible("inverse of zero field element");
    auto [g, u, v] = poly_xgcd(rep_, inst_->f);
    if (g.degree() != 0)
        throw not_invertible("defining polynomial not irreducible over this representative");
    // u*rep + v*f = g (constant) => rep^{-1} = u/g
    return {inst_, u * (Rational(1) / g.coeff(0))};
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(const Integer& e) const {
    if (sign(e) < 0) return inverse().pow(-e);
    FieldElement acc = one(inst_);
    FieldElement base = *this;
    Integer k = e;
    while (sign(k) > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

FieldElement FieldElement::operator+(const Rational& c) const {
    return *this + from_rational(inst_, c);
}

FieldElement FieldElement::operator*(const Rational& c) const {
    return {inst_, rep_ * c};
}

Rational FieldElement::norm() const {
    if (rep_.is_zero()) return Rational(0);
    if (rep_.degree() == 0) {
        Rational c = rep_.coeff(0);
        Rational acc(1);
        for (int i = 0; i < inst_->degree; ++i) acc *= c;
        return acc;
    }
    // f monic: Res(f, g) = prod over roots of f of g(root) = N(g(rho))
    return resultant(inst_->f, rep_);
}

bool FieldElement::is_primitive_element() const {
    int d = inst_->degree;
    // rows: coefficient vectors of e^0 .. e^(d-1)
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
    FieldElement p = one(inst_);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= p.rep().degree(); ++j) m[i][j] = p.rep().coeff(j);
        p = p * *this;
    }
    // Gaussian elimination rank
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int pivot = -1;
        for (int row = rank; row < d; ++row)
            if (sign(m[row][col]) != 0) { pivot = row; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int row = rank + 1; row < d; ++row) {
            if (sign(m[row][col]) == 0) continue;
            Rational factor = m[row][col] / m[rank][col];
            for (int k = col; k < d; ++k) m[row][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank == d;
}

FieldElement eval_at(const RatPoly& p, const FieldElement& e) {
    FieldElement acc = FieldElement::zero(e.instance());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * e + FieldElement::from_rational(e.instance(), p.coeff(i));
    return acc;
}

FieldElement eval_at(const IntPoly& p, const FieldElement& e) {
    return eval_at(RatPoly::from_int(p), e);
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

int MobiusMap::order(int max_order) const {
    MobiusMap m = *this;
    for (int k = 1; k <= max_order; ++k) {
        if (k > 1) m = m.compose(*this);
        if (sign(m.b) == 0 && sign(m.c) == 0 && m.a == m.d) return k;
    }
    return 0;
}

FieldElement MobiusMap::apply(const FieldElement& x) const {
    auto inst = x.instance();
    FieldElement num = x * Rational(a) + FieldElement::from_rational(inst, Rational(b));
    FieldElement den = x * Rational(c) + FieldElement::from_rational(inst, Rational(d));
    return num / den;
}

Integer MobiusMap::apply_mod(const Integer& t, const Integer& ell) const {
    Integer den = floor_mod(c * t + d, ell);
    if (sign(den) == 0)
        throw denominator_vanishes("Mobius denominator vanishes at " + to_string(t) +
                                   " mod " + to_string(ell));
    Integer num = floor_mod(a * t + b, ell);
    return floor_mod(num * inv_mod(den, ell).value, ell);
}

} // namespace classforge
