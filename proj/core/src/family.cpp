#include "classforge/family.hpp"

#include <mutex>

#include "classforge/factorization.hpp"
#include "classforge/modular.hpp"
#include "classforge/resultant.hpp"

namespace classforge {

bool admissible(FamilyId family, const Integer& n) {
    switch (family) {
    case FamilyId::sextic:
        return n != 0 && n != 6 && n != -6 && n != 26 && n != -26;
    case FamilyId::quartic:
        return n != 0 && n != 3 && n != -3;
    case FamilyId::cubic:
        return mpz_odd_p(n.get_mpz_t()) && n >= 5;
    }
    return false;
}

RatPoly defining_poly(FamilyId family, const Integer& n) {
    if (!admissible(family, n))
        throw inadmissible_parameter("n = " + to_string(n) + " is not admissible for the " +
                                     to_string(family) + " family");
    Rational N(n);
    switch (family) {
    case FamilyId::sextic: {
        RatPoly f({Rational(1), (N + 6) / 2, (N - 6) * Rational(5, 4), Rational(-20),
                   -(N + 6) * Rational(5, 4), -(N - 6) / 2, Rational(1)});
        bool integral = true;
        for (const auto& c : f.coeffs())
            if (denominator(c) != 1) integral = false;
        if (integral != (floor_mod(n, 4) == 2))
            throw identity_violation("sextic integrality pattern violated at n = " + to_string(n));
        return f;
    }
    case FamilyId::quartic:
        return RatPoly({Rational(1), N, Rational(-6), -N, Rational(1)});
    case FamilyId::cubic:
        return RatPoly({Rational(-1), N, N, Rational(1)});
    }
    throw error("unreachable");
}

IntPoly defining_poly_int(FamilyId family, const Integer& n) {
    RatPoly f = defining_poly(family, n);
    for (const auto& c : f.coeffs())
        if (denominator(c) != 1)
            throw inadmissible_parameter("defining polynomial is not integral at n = " + to_string(n));
    std::vector<Integer> v;
    for (const auto& c : f.coeffs()) v.push_back(numerator(c));
    return IntPoly(std::move(v));
}

InstancePtr make_instance(FamilyId family, const Integer& n) {
    auto inst = std::make_shared<FieldInstance>();
    inst->family = family;
    inst->n = n;
    inst->f = defining_poly(family, n);
    inst->degree = family_degree(family);
    return inst;
}

Integer special_point(FamilyId family) {
    switch (family) {
    case FamilyId::sextic: return -3;
    case FamilyId::quartic: return -2;
    case FamilyId::cubic: return 2;
    }
    throw error("unreachable");
}

Integer special_value(FamilyId family, const Integer& n) {
    Integer linear;
    switch (family) {
    case FamilyId::sextic: linear = 30 * n - 143; break;
    case FamilyId::quartic: linear = 6 * n - 7; break;
    case FamilyId::cubic: linear = 6 * n + 7; break;
    }
    Rational direct = defining_poly(family, n).eval(Rational(special_point(family)));
    if (direct != Rational(linear))
        throw identity_violation("special value mismatch at n = " + to_string(n));
    return linear;
}

const std::vector<Integer>& excluded_primes(FamilyId family) {
    static std::vector<Integer> sx, qu, cu;
    static std::once_flag once;
    std::call_once(once, [] {
        auto derive = [](const IntPoly& lin, const IntPoly& crit,
                         const std::vector<Integer>& expected) {
            Integer res = resultant(lin, crit);
            PrimeFactorization fac = factorize(res);
            std::vector<Integer> primes;
            for (const auto& [p, e] : fac.factors) primes.push_back(p);
            if (primes != expected)
                throw identity_violation("excluded-prime derivation mismatch for resultant " +
                                         to_string(res));
            return primes;
        };
        sx = derive(IntPoly({Integer(-143), Integer(30)}),
                    IntPoly({Integer(108), Integer(0), Integer(1)}), {Integer(7)});
        qu = derive(IntPoly({Integer(-7), Integer(6)}),
                    IntPoly({Integer(16), Integer(0), Integer(1)}), {Integer(5)});
        cu = derive(IntPoly({Integer(7), Integer(6)}),
                    IntPoly({Integer(-27), Integer(0), Integer(-18), Integer(0), Integer(1)}),
                    {Integer(37), Integer(47)});
    });
    switch (family) {
    case FamilyId::sextic: return sx;
    case FamilyId::quartic: return qu;
    case FamilyId::cubic: return cu;
    }
    throw error("unreachable");
}

const std::vector<MobiusMap>& conjugate_maps(FamilyId family) {
    static const std::vector<MobiusMap> sextic_maps = [] {
        MobiusMap sigma{1, -1, 1, 2}; // rho -> (rho-1)/(rho+2)
        std::vector<MobiusMap> maps{{1, 0, 0, 1}};
        for (int i = 1; i < 6; ++i) maps.push_back(sigma.compose(maps.back()));
        return maps;
    }();
    static const std::vector<MobiusMap> quartic_maps = [] {
        MobiusMap sigma{1, -1, 1, 1}; // rho -> (rho-1)/(rho+1)
        std::vector<MobiusMap> maps{{1, 0, 0, 1}};
        for (int i = 1; i < 4; ++i) maps.push_back(sigma.compose(maps.back()));
        return maps;
    }();
    switch (family) {
    case FamilyId::sextic: return sextic_maps;
    case FamilyId::quartic: return quartic_maps;
    case FamilyId::cubic:
        throw non_galois_family("the cubic family is not Galois");
    }
    throw error("unreachable");
}

const std::vector<MobiusMap>& conjugate_closed_forms(FamilyId family) {
    static const std::vector<MobiusMap> sextic_table{
        {1, 0, 0, 1},   // rho0 = rho
        {1, -1, 1, 2},  // rho1 = (rho-1)/(rho+2)
        {0, -1, 1, 1},  // rho2 = -1/(rho+1)
        {-1, -2, 2, 1}, // rho3 = -(rho+2)/(2rho+1)
        {-1, -1, 1, 0}, // rho4 = -(rho+1)/rho
        {-2, -1, 1, -1} // rho5 = -(2rho+1)/(rho-1)
    };
    static const std::vector<MobiusMap> quartic_table{
        {1, 0, 0, 1},  // rho0 = rho
        {1, -1, 1, 1}, // rho1 = (rho-1)/(rho+1)
        {0, -1, 1, 0}, // rho2 = -1/rho
        {-1, -1, 1, -1} // rho3 = -(rho+1)/(rho-1)
    };
    switch (family) {
    case FamilyId::sextic: return sextic_table;
    case FamilyId::quartic: return quartic_table;
    case FamilyId::cubic:
        throw non_galois_family("the cubic family is not Galois");
    }
    throw error("unreachable");
}

FieldElement conjugate(const FieldElement& e, int i) {
    const auto& inst = e.instance();
    const auto& maps = conjugate_maps(inst->family);
    int k = ((i % static_cast<int>(maps.size())) + static_cast<int>(maps.size())) %
            static_cast<int>(maps.size());
    if (k == 0) return e;
    FieldElement rho_i = maps[k].apply(FieldElement::generator(inst));
    return eval_at(e.rep(), rho_i);
}

namespace {

FieldElement rho_conj(const InstancePtr& inst, int i) {
    return conjugate_maps(inst->family)[i].apply(FieldElement::generator(inst));
}

} // namespace

FieldElement w_element_unchecked(const InstancePtr& inst) {
    switch (inst->family) {
    case FamilyId::sextic: {
        FieldElement r1 = rho_conj(inst, 1), r2 = rho_conj(inst, 2);
        FieldElement r4 = rho_conj(inst, 4), r5 = rho_conj(inst, 5);
        return ((r1 + Rational(3)) * (r2 + Rational(3))) /
               ((r4 + Rational(3)) * (r5 + Rational(3)));
    }
    case FamilyId::quartic: {
        FieldElement r1 = rho_conj(inst, 1), r3 = rho_conj(inst, 3);
        return (r1 + Rational(2)) / (r3 + Rational(2));
    }
    case FamilyId::cubic:
        return FieldElement::from_rational(inst, Rational(2)) - FieldElement::generator(inst);
    }
    throw error("unreachable");
}

std::vector<FieldElement> w_subfield_norms(const InstancePtr& inst) {
    FieldElement w = w_element_unchecked(inst);
    switch (inst->family) {
    case FamilyId::sextic:
        return {w * conjugate(w, 2) * conjugate(w, 4), w * conjugate(w, 3)};
    case FamilyId::quartic:
        return {w * conjugate(w, 2)};
    case FamilyId::cubic:
        return {};
    }
    throw error("unreachable");
}

FieldElement w_element(const InstancePtr& inst) {
    FieldElement w = w_element_unchecked(inst);
    if (inst->family == FamilyId::cubic) {
        FieldElement cof = cubic_cofactor(inst);
        Integer sv = special_value(inst->family, inst->n);
        if (!(w * cof == FieldElement::from_rational(inst, Rational(sv))))
            throw identity_violation("(2-rho) * cofactor != f_n(2)");
        return w;
    }
    for (const auto& nrm : w_subfield_norms(inst))
        if (!(nrm == FieldElement::one(inst)))
            throw identity_violation("subfield norm of w is not 1 at n = " + to_string(inst->n));
    return w;
}

FieldElement target_element(const InstancePtr& inst) {
    FieldElement w = w_element(inst);
    FieldElement target;
    switch (inst->family) {
    case FamilyId::sextic:
        target = w * rho_conj(inst, 4) / rho_conj(inst, 1);
        break;
    case FamilyId::quartic: {
        target = w / rho_conj(inst, 1);
        FieldElement nk2 = target * conjugate(target, 2);
        if (!(nk2 == FieldElement::from_rational(inst, Rational(-1))))
            throw identity_violation("N_{K|k2}(w/rho1) != -1");
        break;
    }
    case FamilyId::cubic:
        throw non_galois_family("target_element is defined for the Galois families only");
    }
    if (!target.is_primitive_element())
        throw identity_violation("target element is not primitive at n = " + to_string(inst->n));
    return target;
}

FieldElement cubic_cofactor(const InstancePtr& inst) {
    if (inst->family != FamilyId::cubic) throw error("cubic_cofactor: wrong family");
    Rational N(inst->n);
    FieldElement rho = FieldElement::generator(inst);
    FieldElement cof = rho * rho + rho * (N + 2) + FieldElement::from_rational(inst, N * 3 + 4);
    // (2 - rho) * cofactor must recompose the full norm f_n(2)
    FieldElement two_minus = FieldElement::from_rational(inst, Rational(2)) - rho;
    Integer sv = special_value(inst->family, inst->n);
    if (!(two_minus * cof == FieldElement::from_rational(inst, Rational(sv))))
        throw identity_violation("cubic cofactor identity failed at n = " + to_string(inst->n));
    return cof;
}

FieldElement mu_unit(const InstancePtr& inst) {
    if (inst->family != FamilyId::cubic) throw error("mu_unit: wrong family");
    if (!mpz_odd_p(inst->n.get_mpz_t()))
        throw parity_violated("mu requires odd n");
    Integer half = divexact(inst->n + 3, Integer(2));
    FieldElement rho = FieldElement::generator(inst);
    FieldElement mu = (rho + Rational(1)) * Rational(half) + rho * rho;
    if (cubic_norm_form(half, half, 1, inst->n) != 1)
        throw identity_violation("norm form of mu is not 1");
    if (mu.norm() != Rational(1))
        throw identity_violation("resultant norm of mu is not 1");
    // mu = (rho+1)^3 / (2 rho)
    FieldElement lhs = mu * rho * Rational(2);
    FieldElement rhs = (rho + Rational(1)).pow(3);
    if (!(lhs == rhs))
        throw identity_violation("mu != (rho+1)^3/(2 rho)");
    return mu;
}

Integer cubic_norm_form(const Integer& a, const Integer& b, const Integer& c, const Integer& n) {
    Integer n2 = (a * a * c + a * c * c - a * b * c);
    Integer n1 = (2 * a * a * c + a * a * b - 2 * a * c * c - a * b * b - b * c * c + b * b * c);
    Integer n0 = (a * a * a + b * b * b + c * c * c - 3 * a * b * c);
    return n2 * n * n - n1 * n + n0;
}

IntPoly pnr_poly(FamilyId family, const Integer& n, unsigned r) {
    if (family == FamilyId::cubic)
        throw non_galois_family("p_{n,r} exists for the Galois families only");
    if (!admissible(family, n))
        throw inadmissible_parameter("n = " + to_string(n) + " inadmissible");
    if (family == FamilyId::sextic) {
        if (r == 0 || gcd(Integer(r), Integer(6)) != 1)
            throw gcd_constraint_violated("sextic p_{n,r} requires gcd(r, 6) = 1");
        Integer S = 30 * n - 143;
        Integer a0 = S * S;
        Integer a1 = -6 * a0;
        Integer a2 = -104149 * n * n - 128700 * n - 12399357;
        Integer a3 = -253298 * n * n + 171600 * n - 25821164;
        // the two published forms must agree
        if (900 * a2 != -104149 * S * S - 2 * 16823807 * S - Integer("13841287201"))
            throw identity_violation("sextic a2 dual forms disagree");
        if (900 * a3 != -253298 * S * S - 4 * 16823807 * S - 2 * Integer("13841287201"))
            throw identity_violation("sextic a3 dual forms disagree");
        IntPoly base({a0, a1, a2, a3, a2, a1, a0});
        return base.compose_power(r);
    }
    // quartic
    if (r == 0 || r % 2 == 0)
        throw gcd_constraint_violated("quartic p_{n,r} requires odd r");
    Integer a0 = 6 * n - 7;
    Integer a1 = 7 * n + 96;
    IntPoly base({a0, a1, -6 * a0, -a1, a0});
    return base.compose_power(r);
}

bool pnr_is_min_poly_check(const InstancePtr& inst) {
    IntPoly p = pnr_poly(inst->family, inst->n, 1);
    if (p.degree() != inst->degree) return false;
    FieldElement t = target_element(inst);
    return eval_at(p, t).is_zero();
}

IntPoly script_P(FamilyId family, unsigned r) {
    Integer a, b;
    switch (family) {
    case FamilyId::sextic:
        if (r == 0 || gcd(Integer(r), Integer(6)) != 1)
            throw gcd_constraint_violated("sextic script-P requires gcd(r, 6) = 1");
        a = 143;
        b = 900 * 108; // (30 sqrt(-108))^2 up to sign
        break;
    case FamilyId::quartic:
        if (r == 0 || r % 2 == 0)
            throw gcd_constraint_violated("quartic script-P requires odd r");
        a = 7;
        b = 36 * 16;
        break;
    case FamilyId::cubic:
        throw non_galois_family("script-P exists for the Galois families only");
    }
    IntPoly t = IntPoly::monomial(1, static_cast<int>(r)) + IntPoly::constant(a);
    return t * t + IntPoly::constant(b);
}

IntPoly phi_poly(const Integer& n) {
    IntPoly xm1({Integer(-1), Integer(1)});
    IntPoly x2x({Integer(0), Integer(1), Integer(1)});
    IntPoly lhs = IntPoly::constant(1);
    for (int i = 0; i < 6; ++i) lhs = lhs * xm1;
    IntPoly sq = x2x * x2x;
    return lhs - sq * (n * n + 108);
}

bool phi_identity(const Integer& n) {
    if (!admissible(FamilyId::sextic, n)) throw inadmissible_parameter("phi_identity: bad n");
    IntPoly phi = phi_poly(n);
    Integer m = n * n + 93;
    IntPoly expected({Integer(1), Integer(-6), -m, -(2 * n * n + 236), -m, Integer(-6), Integer(1)});
    if (!(phi == expected)) return false;
    if (!(phi == phi_poly(-n))) return false;
    auto inst = make_instance(FamilyId::sextic, n);
    FieldElement q03 = FieldElement::generator(inst) / rho_conj(inst, 3);
    return eval_at(phi, q03).is_zero();
}

K103Report k103_unit_relation() {
    auto inst = make_instance(FamilyId::quartic, Integer(-103));
    auto make = [&](const std::vector<Rational>& asc) { return FieldElement(inst, RatPoly(asc)); };
    FieldElement u1 = make({Rational(63, 125), Rational(-208, 125), Rational(101, 125), Rational(1, 125)});
    FieldElement u2 = make({Rational(83, 250), Rational(156, 125), Rational(53, 125), Rational(1, 250)});
    FieldElement u3 = make({Rational(-207, 250), Rational(-364, 125), Rational(48, 125), Rational(1, 250)});
    K103Report rep;
    rep.unit_norms = {u1.norm(), u2.norm(), u3.norm()};
    rep.norms_are_units = true;
    for (const auto& nr : rep.unit_norms)
        if (!(nr == Rational(1) || nr == Rational(-1))) rep.norms_are_units = false;
    FieldElement rho = FieldElement::generator(inst);
    rep.relation_holds = (u1 * u1 * u2 * u2 * u2 == rho);
    return rep;
}

IntPoly defining_poly_mod(FamilyId family, const Integer& n, const Integer& ell) {
    if (mpz_even_p(ell.get_mpz_t()))
        throw error("defining_poly_mod: ell must be odd");
    RatPoly f = defining_poly(family, n);
    std::vector<Integer> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Integer num = floor_mod(numerator(c), ell);
        v.push_back(floor_mod(num * inv_mod(denominator(c), ell).value, ell));
    }
    return IntPoly(std::move(v));
}

Integer eval_fn_mod(FamilyId family, const Integer& n, const Integer& t, const Integer& ell) {
    IntPoly f = defining_poly_mod(family, n, ell);
    Integer acc = 0;
    for (int i = family_degree(family); i >= 0; --i)
        acc = floor_mod(acc * t + f.coeff(i), ell);
    return acc;
}

std::optional<Integer> target_image_mod(FamilyId family, const Integer& t, const Integer& ell) {
    const auto& maps = conjugate_maps(family); // throws non_galois_family for the cubic
    std::vector<Integer> rho;
    try {
        for (const auto& m : maps) rho.push_back(m.apply_mod(t, ell));
    } catch (const denominator_vanishes&) {
        return std::nullopt;
    }
    auto inv = [&](const Integer& a) -> std::optional<Integer> {
        if (sign(floor_mod(a, ell)) == 0) return std::nullopt;
        return inv_mod(a, ell).value;
    };
    if (family == FamilyId::sextic) {
        Integer num = floor_mod((3 + rho[1]) * (3 + rho[2]), ell);
        Integer den = floor_mod((3 + rho[4]) * (3 + rho[5]), ell);
        auto dinv = inv(den);
        if (!dinv) return std::nullopt;
        Integer w = floor_mod(num * *dinv, ell);
        auto r1inv = inv(rho[1]);
        if (!r1inv) return std::nullopt;
        Integer img = floor_mod(floor_mod(w * rho[4], ell) * *r1inv, ell);
        if (sign(img) == 0) return std::nullopt;
        return img;
    }
    Integer num = floor_mod(2 + rho[1], ell);
    auto dinv = inv(2 + rho[3]);
    if (!dinv) return std::nullopt;
    Integer w = floor_mod(num * *dinv, ell);
    auto r1inv = inv(rho[1]);
    if (!r1inv) return std::nullopt;
    Integer img = floor_mod(w * *r1inv, ell);
    if (sign(img) == 0) return std::nullopt;
    return img;
}

GIdentityReport g_identities(FamilyId family, unsigned r, const Integer& c_r,
                             const Integer& y0, const Integer& q, const Integer& m) {
    GIdentityReport rep;
    const Integer seven12("13841287201");
    if (family == FamilyId::cubic)
        throw non_galois_family("g(X,Y) exists for the Galois families only");

    if (family == FamilyId::sextic) {
        if (r == 0 || gcd(Integer(r), Integer(6)) != 1)
            throw gcd_constraint_violated("sextic requires gcd(r, 6) = 1");
        if (floor_mod(pow_i(c_r * (-143), r), Integer(30)) != floor_mod(Integer(-143), Integer(30)))
            throw congruence_violated("(c_r(-143))^r != -143 (mod 30)");
        // S(Y) = (c_r (30(y0 + 8 q^2 Y) - 143))^r
        RatPoly L({Rational(c_r * (30 * y0 - 143)), Rational(c_r * 240 * q * q)});
        RatPoly S = RatPoly::constant(1);
        for (unsigned i = 0; i < r; ++i) S = S * L;
        RatPoly nY = (S + RatPoly::constant(143)) * Rational(1, 30);
        RatPoly A2 = nY * nY * Rational(-104149) + nY * Rational(-128700) + RatPoly::constant(-12399357);
        RatPoly A3 = nY * nY * Rational(-253298) + nY * Rational(171600) + RatPoly::constant(-25821164);
        RatPoly c2 = A2 * Rational(900) + S * S * Rational(104149) + S * Rational(2 * 16823807);
        RatPoly c3 = A3 * Rational(900) + S * S * Rational(253298) + S * Rational(4 * 16823807);
        rep.collapse_constant = -seven12;
        rep.collapse_ok = (c2 == RatPoly::constant(Rational(-seven12))) &&
                          (c3 == RatPoly::constant(Rational(-2 * seven12)));

        Integer Sm = pow_i(c_r * (30 * (y0 + 8 * q * q * m) - 143), r);
        rep.n_m = divexact(Sm + 143, Integer(30));
        auto g_of = [&](const Integer& s) {
            Integer g0 = s * s;
            Integer g2 = divexact(-104149 * s * s - 2 * 16823807 * s - seven12, Integer(900));
            Integer g3 = divexact(-253298 * s * s - 4 * 16823807 * s - 2 * seven12, Integer(900));
            return IntPoly({g0, -6 * g0, g2, g3, g2, -6 * g0, g0});
        };
        rep.specialization_ok =
            g_of(Sm).compose_power(r) == pnr_poly(FamilyId::sextic, rep.n_m, r);

        // t with c_r(30(y0+8q^2 t)-143) = 1, i.e. S = 1: g(X,t) = h(X^r)
        RatPoly h({Rational(1), Rational(-6), make_rational(-385417749, 25),
                   make_rational(-770836748, 25), make_rational(-385417749, 25), Rational(-6),
                   Rational(1)});
        Rational g2t = make_rational(Integer(-104149) - 2 * 16823807 - seven12, Integer(900));
        Rational g3t = make_rational(Integer(-253298) - 4 * 16823807 - 2 * seven12, Integer(900));
        RatPoly gt({Rational(1), Rational(-6), g2t, g3t, g2t, Rational(-6), Rational(1)});
        rep.special_point_ok = gt.compose_power(r) == h.compose_power(r);
        return rep;
    }

    // quartic
    if (r == 0 || r % 2 == 0) throw gcd_constraint_violated("quartic requires odd r");
    if (floor_mod(c_r, Integer(6)) != 1)
        throw congruence_violated("c_r != 1 (mod 6)");
    RatPoly L({Rational(c_r * (30 * y0 - 1)), Rational(c_r * 30 * q * q)});
    RatPoly S = RatPoly::constant(1);
    for (unsigned i = 0; i < r; ++i) S = S * L;
    RatPoly nY = (S + RatPoly::constant(7)) * Rational(1, 6);
    RatPoly A1 = nY * Rational(7) + RatPoly::constant(96);
    rep.collapse_constant = 625;
    rep.collapse_ok = (A1 * Rational(6) - S * Rational(7)) == RatPoly::constant(625);

    Integer Sm = pow_i(c_r * (30 * (y0 + q * q * m) - 1), r);
    rep.n_m = divexact(Sm + 7, Integer(6));
    Integer g0 = Sm;
    Integer g1 = divexact(7 * (Sm + 7), Integer(6)) + 96;
    IntPoly gm({g0, g1, -6 * g0, -g1, g0});
    rep.specialization_ok = gm.compose_power(r) == pnr_poly(FamilyId::quartic, rep.n_m, r);

    // t with c_r(30(y0+q^2 t)-1) = -1: g(X,t) = -f_{-103}(X^r)
    IntPoly gt({Integer(-1), Integer(103), Integer(6), Integer(-103), Integer(-1)});
    IntPoly fm103 = defining_poly_int(FamilyId::quartic, Integer(-103));
    rep.special_point_ok = gt.compose_power(r) == (-fm103).compose_power(r);
    return rep;
}

} // namespace classforge
