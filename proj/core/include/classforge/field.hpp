#ifndef CLASSFORGE_FIELD_HPP
#define CLASSFORGE_FIELD_HPP

#include <array>
#include <memory>
#include <string>

#include "classforge/poly.hpp"

namespace classforge {

enum class FamilyId { sextic, quartic, cubic };

std::string to_string(FamilyId f);
FamilyId family_from_string(const std::string& s);
int family_degree(FamilyId f);

/// One concrete number field K_n = Q[X]/(f_n) of a family.
struct FieldInstance {
    FamilyId family;
    Integer n;
    RatPoly f; // monic defining polynomial, degree = family_degree
    int degree;
};

using InstancePtr = std::shared_ptr<const FieldInstance>;

/// Residue-class representative: a rational polynomial of degree < deg f,
/// with arithmetic performed modulo f.  Immutable value type.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(InstancePtr inst, RatPoly rep);

    static FieldElement zero(InstancePtr inst);
    static FieldElement one(InstancePtr inst);
    static FieldElement from_rational(InstancePtr inst, const Rational& c);
    /// The class of X, i.e. the distinguished root rho.
    static FieldElement generator(InstancePtr inst);

    const RatPoly& rep() const { return rep_; }
    const InstancePtr& instance() const { return inst_; }
    bool is_zero() const { return rep_.is_zero(); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const; // throws not_invertible on 0
    FieldElement inverse() const;
    FieldElement pow(const Integer& e) const; // negative allowed
    bool operator==(const FieldElement& o) const { return rep_ == o.rep_; }

    FieldElement operator+(const Rational& c) const;
    FieldElement operator*(const Rational& c) const;

    /// Field norm down to Q: product of the images under all embeddings,
    /// computed as Res(f, rep) for monic f.
    Rational norm() const;

    /// True when 1, e, e^2, ..., e^(deg-1) are linearly independent over Q.
    bool is_primitive_element() const;

private:
    InstancePtr inst_;
    RatPoly rep_;
};

/// Evaluate a polynomial at a field element (Horner).
FieldElement eval_at(const RatPoly& p, const FieldElement& e);
FieldElement eval_at(const IntPoly& p, const FieldElement& e);

/// Fractional-linear map x -> (a x + b) / (c x + d), ad - bc != 0.
struct MobiusMap {
    Integer a, b, c, d;

    MobiusMap compose(const MobiusMap& o) const; // composition: this after o
    /// Multiplicative order as an element of PGL_2 (matrix power is scalar);
    /// returns 0 if no order <= max_order is found.
    int order(int max_order = 24) const;

    /// Image of a field element under the map.
    FieldElement apply(const FieldElement& x) const;
    /// Image of a residue t mod ell; throws denominator_vanishes when c t + d = 0.
    Integer apply_mod(const Integer& t, const Integer& ell) const;
};

} // namespace classforge

#endif
