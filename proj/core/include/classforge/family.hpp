#ifndef CLASSFORGE_FAMILY_HPP
#define CLASSFORGE_FAMILY_HPP

#include <array>
#include <optional>
#include <vector>

#include "classforge/field.hpp"

namespace classforge {

bool admissible(FamilyId family, const Integer& n);

/// Exact defining polynomial f_n.  The sextic coefficients are rational for
/// n != 2 (mod 4), integral otherwise (asserted); quartic and cubic are
/// always integral.  Throws inadmissible_parameter.
RatPoly defining_poly(FamilyId family, const Integer& n);

/// Integral f_n; for the sextic this demands n = 2 (mod 4).
IntPoly defining_poly_int(FamilyId family, const Integer& n);

InstancePtr make_instance(FamilyId family, const Integer& n);

/// The distinguished evaluation point: -3 (sextic), -2 (quartic), 2 (cubic).
Integer special_point(FamilyId family);

/// f_n at the special point, asserted equal to the linear form
/// 30n-143 / 6n-7 / 6n+7.
Integer special_value(FamilyId family, const Integer& n);

/// Primes that may divide both the special value and disc(f_n):
/// {7} / {5} / {37, 47}.  The sets are re-derived on first use by factoring
/// the resultant of the linear form with the discriminant-critical factor.
const std::vector<Integer>& excluded_primes(FamilyId family);

/// sigma^i as fractional-linear maps on rho, i = 0..degree-1 (Galois families
/// only; throws non_galois_family for the cubic).
const std::vector<MobiusMap>& conjugate_maps(FamilyId family);

/// The closed forms of the conjugates as a fixed table, for
/// table-reproduction checks against the composed powers of sigma.
const std::vector<MobiusMap>& conjugate_closed_forms(FamilyId family);

/// sigma^i applied to an arbitrary element (g(rho) -> g(rho_i)).
FieldElement conjugate(const FieldElement& e, int i);

/// The distinguished principal-ideal generator: sextic
/// (3+rho1)(3+rho2)/((3+rho4)(3+rho5)), quartic (2+rho1)/(2+rho3),
/// cubic 2-rho.  Galois subfield norms of w are asserted trivial.
FieldElement w_element(const InstancePtr& inst);

/// Same as w_element but without the norm assertions (verifier entry point).
FieldElement w_element_unchecked(const InstancePtr& inst);

/// Subfield norms of w that must equal 1: sextic {N_{K|k2}, N_{K|k3}},
/// quartic {N_{K|k2}}.
std::vector<FieldElement> w_subfield_norms(const InstancePtr& inst);

/// The element whose p-th-power-freeness drives the order argument:
/// w*rho4/rho1 (sextic) or w/rho1 (quartic); asserted primitive.
FieldElement target_element(const InstancePtr& inst);

/// Cubic quadratic cofactor (2-rho1)(2-rho2) = rho^2+(2+n)rho+(4+3n);
/// asserted against (2-rho)*cofactor = f_n(2).
FieldElement cubic_cofactor(const InstancePtr& inst);

/// Cubic unit mu = ((n+3)/2)(1+rho)+rho^2 with N(mu)=1, asserted via the
/// explicit norm form, the resultant norm, and mu = (rho+1)^3/(2 rho).
FieldElement mu_unit(const InstancePtr& inst);

/// N(a + b rho + c rho^2) in K_n (cubic family) as a closed form.
Integer cubic_norm_form(const Integer& a, const Integer& b, const Integer& c, const Integer& n);

/// p_{n,r}: the scaled minimal polynomial of the target element composed with
/// X^r.  Requires gcd(r,6)=1 (sextic) or odd r (quartic); the two published
/// forms of the sextic degree-2 and degree-3 coefficients are asserted equal.
IntPoly pnr_poly(FamilyId family, const Integer& n, unsigned r);

/// Confirms p_{n,1}(target) = 0 in K_n and deg p_{n,1} = [K_n : Q].
bool pnr_is_min_poly_check(const InstancePtr& inst);

/// The splitting-control polynomial: X^{2r}+286 X^r+117649 (sextic) or
/// X^{2r}+14 X^r+625 (quartic), built by expanding (X^r+a)^2 + b.
IntPoly script_P(FamilyId family, unsigned r);

/// phi_n(X) = (X-1)^6 - (n^2+108)(X^2+X)^2, the integral sextic generator.
IntPoly phi_poly(const Integer& n);

/// Checks the expanded coefficient list, phi_n(rho0/rho3) = 0, and phi_n = phi_{-n}.
bool phi_identity(const Integer& n);

struct K103Report {
    std::array<Rational, 3> unit_norms;
    bool norms_are_units;   // each +-1
    bool relation_holds;    // rho = u1^2 u2^3 in K_{-103}
};

/// Verifies the hardcoded fundamental-unit relation in the quartic field K_{-103}.
K103Report k103_unit_relation();

/// f_n with coefficients reduced into [0, ell) for an odd prime ell (the
/// rational denominators 2 and 4 are inverted mod ell).
IntPoly defining_poly_mod(FamilyId family, const Integer& n, const Integer& ell);

/// f_n(t) mod ell, via defining_poly_mod.
Integer eval_fn_mod(FamilyId family, const Integer& n, const Integer& t, const Integer& ell);

/// Image of the target element under rho -> t in F_ell (Galois families),
/// computed through the Mobius conjugate maps; empty when any denominator or
/// numerator factor vanishes, so a present value certifies v_L(target) = 0.
std::optional<Integer> target_image_mod(FamilyId family, const Integer& t, const Integer& ell);

struct GIdentityReport {
    Integer collapse_constant;  // -7^12 (sextic) or 625 (quartic)
    bool collapse_ok;           // linear-combination identities in Y
    Integer n_m;                // parameter with g(X,m) = p_{n_m,r}(X)
    bool specialization_ok;     // coefficient-by-coefficient match
    bool special_point_ok;      // g(X,t) = h(X^r) resp. -f_{-103}(X^r)
    bool ok() const { return collapse_ok && specialization_ok && special_point_ok; }
};

/// Machine-checks the content of the bivariate-irreducibility argument.
/// Preconditions on c_r: (c_r(-143))^r = -143 (mod 30) for the sextic,
/// c_r = 1 (mod 6) for the quartic; throws congruence_violated otherwise.
GIdentityReport g_identities(FamilyId family, unsigned r, const Integer& c_r,
                             const Integer& y0, const Integer& q, const Integer& m);

} // namespace classforge

#endif
