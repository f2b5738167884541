#ifndef CLASSFORGE_POLY_HPP
#define CLASSFORGE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "classforge/numeric.hpp"

namespace classforge {

class IntPoly;

/// Univariate polynomial over Q.  Coefficients ascending; empty vector is the
/// zero polynomial and the leading coefficient of a nonzero polynomial is
/// nonzero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> ascending);
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, int degree);
    static RatPoly from_int(const IntPoly& f);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& lc() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& c) const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Euclidean division; divisor nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
    RatPoly operator%(const RatPoly& o) const { return divmod(o).second; }

    RatPoly derivative() const;
    Rational eval(const Rational& x) const;

    /// f(X^r), r >= 1.
    RatPoly compose_power(unsigned r) const;

    RatPoly monic() const;

    /// Smallest d > 0 with d*f integral, together with d*f.
    std::pair<Integer, IntPoly> clear_denominators() const;

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

/// Monic gcd over Q (1 for coprime inputs, 0 only if both are 0).
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic or zero.
std::tuple<RatPoly, RatPoly, RatPoly> poly_xgcd(const RatPoly& a, const RatPoly& b);

/// Univariate polynomial over Z, same representation conventions as RatPoly.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> ascending);
    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& lc() const;
    Integer coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Integer& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly derivative() const;
    Integer eval(const Integer& x) const;
    IntPoly compose_power(unsigned r) const;
    /// f(X + c).
    IntPoly shift(const Integer& c) const;

    Integer content() const;
    IntPoly primitive_part() const;

    /// Pseudo-remainder: lc(d)^(deg f - deg d + 1) * f = q*d + rem.
    IntPoly pseudo_rem(const IntPoly& divisor) const;

    /// Exact coefficient-wise division; throws identity_violation if not exact.
    IntPoly divexact_scalar(const Integer& c) const;

    std::string str() const;

private:
    std::vector<Integer> coeffs_;
    void normalize();
};

/// Univariate polynomial over F_p for a prime modulus; coefficients reduced.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::vector<Integer> ascending, Integer modulus);
    static ModPoly from_int(const IntPoly& f, const Integer& modulus);
    static ModPoly constant(const Integer& c, const Integer& modulus);
    /// X^k
    static ModPoly monomial_x(unsigned k, const Integer& modulus);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& modulus() const { return mod_; }
    const Integer& lc() const;
    Integer coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly operator*(const Integer& c) const;
    bool operator==(const ModPoly& o) const { return mod_ == o.mod_ && coeffs_ == o.coeffs_; }

    std::pair<ModPoly, ModPoly> divmod(const ModPoly& divisor) const;
    ModPoly operator%(const ModPoly& o) const { return divmod(o).second; }

    ModPoly monic() const;
    ModPoly derivative() const;
    Integer eval(const Integer& x) const;

    /// this^e mod m (binary exponentiation in F_p[X]/(m)).
    ModPoly pow_mod(const Integer& e, const ModPoly& m) const;

    std::string str() const;

private:
    std::vector<Integer> coeffs_;
    Integer mod_ = 0;
    void normalize();
};

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b); // monic

} // namespace classforge

#endif
