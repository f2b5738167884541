#include "classforge/embeddings.hpp"

#include <algorithm>
#include <thread>

namespace classforge {

namespace {

struct Precision {
    unsigned width_bits; // root enclosures refined to width 2^-width_bits
    unsigned terms;      // atanh series terms
    unsigned bits;       // dyadic pre-rounding bits
};

Precision level_precision(int level) {
    return {static_cast<unsigned>(40u << level), static_cast<unsigned>(24 + 12 * level),
            static_cast<unsigned>(192 + 128 * level)};
}

Rational width_of(unsigned bits) { return make_rational(1, pow_i(2, bits)); }

// Enclosure of the unique root of f in (lo, hi); f(lo), f(hi) of opposite signs.
RealInterval bracket_root(const RatPoly& f, const Rational& lo, const Rational& hi,
                          const Rational& width) {
    IsolatingInterval iv = refine_interval(f, {lo, hi}, width);
    return {iv.lo, iv.hi};
}

// Mobius image of an interval; denominator must be sign-definite.
RealInterval mobius_interval(const MobiusMap& m, const RealInterval& x) {
    RealInterval num = RealInterval::point(Rational(m.a)) * x + RealInterval::point(Rational(m.b));
    RealInterval den = RealInterval::point(Rational(m.c)) * x + RealInterval::point(Rational(m.d));
    return num / den;
}

} // namespace

RealInterval rho0_enclosure(const InstancePtr& inst, const Rational& width) {
    const RatPoly& f = inst->f;
    if (sign(f.eval(1)) == 0) throw error("rho0 bracket: f(1) = 0 unexpectedly");
    Rational hi(2);
    while (sign(f.eval(hi)) == sign(f.eval(1))) hi *= 2;
    RealInterval enc = bracket_root(f, Rational(1), hi, width);
    if (!(enc.lo > 1))
        throw precision_exhausted("rho0 enclosure touches 1");
    return enc;
}

namespace {

// The three log quantities of the sextic scan, derived from a rho0 enclosure.
struct SexticLogs {
    RealInterval q14, q30, q25; // log|rho1/rho4|, log|rho3/rho0|, log|rho2/rho5|
};

SexticLogs sextic_logs(const InstancePtr& inst, const Precision& prec) {
    RealInterval r0 = rho0_enclosure(inst, width_of(prec.width_bits));
    const auto& maps = conjugate_maps(FamilyId::sextic);
    std::vector<RealInterval> rho{r0};
    for (int i = 1; i < 6; ++i) rho.push_back(mobius_interval(maps[i], r0));
    auto log_abs_ratio = [&](int i, int j) {
        RealInterval q = (rho[i] / rho[j]).abs();
        return log_interval(q, prec.terms, prec.bits);
    };
    return {log_abs_ratio(1, 4), log_abs_ratio(3, 0), log_abs_ratio(2, 5)};
}

RealInterval sextic_quantity(const InstancePtr& inst, const Precision& prec) {
    SexticLogs l = sextic_logs(inst, prec);
    return l.q14 * l.q30 - l.q25.square();
}

} // namespace

namespace {

ScanEntry scan_one(const Integer& n, int precision_budget) {
    auto inst = make_instance(FamilyId::sextic, n);
    ScanEntry entry{n, RealInterval(), false, -1};
    for (int level = 0; level < precision_budget; ++level) {
        try {
            entry.value = sextic_quantity(inst, level_precision(level));
        } catch (const precision_exhausted&) {
            continue;
        }
        if (!entry.value.contains_zero()) {
            entry.certified = true;
            entry.level = level;
            break;
        }
    }
    return entry;
}

} // namespace

std::vector<ScanEntry> sextic_independence_scan(const Integer& n_lo, const Integer& n_hi,
                                                int precision_budget, int jobs) {
    std::vector<Integer> ns;
    for (Integer n = n_lo; n <= n_hi; ++n)
        if (admissible(FamilyId::sextic, n)) ns.push_back(n);

    std::vector<ScanEntry> out(ns.size());
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < ns.size(); ++i) out[i] = scan_one(ns[i], precision_budget);
        return out;
    }
    for (size_t block = 0; block < ns.size(); block += jobs) {
        size_t count = std::min<size_t>(jobs, ns.size() - block);
        std::vector<std::thread> workers;
        for (size_t i = 0; i < count; ++i)
            workers.emplace_back([&, i] { out[block + i] = scan_one(ns[block + i], precision_budget); });
        for (auto& w : workers) w.join();
    }
    return out;
}

bool sextic_chain_endpoints(const Integer& n, int precision_budget) {
    if (n < 76) throw label_unavailable("the analytic chain is stated for n >= 76");
    auto inst = make_instance(FamilyId::sextic, n);
    for (int level = 0; level < precision_budget; ++level) {
        Precision prec = level_precision(level);
        try {
            RealInterval q = sextic_quantity(inst, prec);
            RealInterval log109 =
                log_interval(RealInterval::point(Rational(10, 9)), prec.terms, prec.bits);
            RealInterval logn3 =
                log_interval(RealInterval::point(Rational(n - 3)), prec.terms, prec.bits);
            RealInterval logn4 =
                log_interval(RealInterval::point(Rational(n + 4)), prec.terms, prec.bits);
            RealInterval mid = log109 * logn3 - logn4.square();
            if (q.hi < mid.lo && sign(mid.hi) < 0) return true;
        } catch (const precision_exhausted&) {
            continue;
        }
    }
    return false;
}

bool quartic_regulator_positive(const Integer& n, int precision_budget) {
    if (!admissible(FamilyId::quartic, n))
        throw inadmissible_parameter("quartic_regulator_positive: bad n");
    auto inst = make_instance(FamilyId::quartic, n);
    QuadraticUnit eps = pell_fundamental_unit(n * n + 16);
    for (int level = 0; level < precision_budget; ++level) {
        Precision prec = level_precision(level);
        try {
            RealInterval u = unit_interval(eps, prec.bits);
            RealInterval log_eps = log_interval(u, prec.terms, prec.bits);
            RealInterval r0 = rho0_enclosure(inst, width_of(prec.width_bits));
            RealInterval r1 = mobius_interval(conjugate_maps(FamilyId::quartic)[1], r0);
            RealInterval l0 = log_interval(r0, prec.terms, prec.bits);
            RealInterval l1 = log_interval(r1.abs(), prec.terms, prec.bits);
            RealInterval reg =
                RealInterval::point(Rational(2)) * log_eps * (l0.square() + l1.square());
            if (reg.definite_sign() > 0) return true;
        } catch (const precision_exhausted&) {
            continue;
        }
    }
    return false;
}

namespace {

// mu = (rho+1)^3 / (2 rho) as an interval image.
RealInterval mu_interval(const RealInterval& rho) {
    RealInterval p1 = rho + RealInterval::point(Rational(1));
    RealInterval cube = p1 * p1 * p1;
    return cube / (RealInterval::point(Rational(2)) * rho);
}

} // namespace

bool cubic_independence_check(const Integer& n, int precision_budget) {
    if (!admissible(FamilyId::cubic, n))
        throw inadmissible_parameter("cubic_independence_check: bad n");
    auto inst = make_instance(FamilyId::cubic, n);
    auto isolated = isolate_real_roots(inst->f);
    if (isolated.size() != 3) return false;
    for (int level = 0; level < precision_budget; ++level) {
        Precision prec = level_precision(level);
        try {
            Rational w = width_of(prec.width_bits);
            RealInterval r0 = bracket_root(inst->f, isolated[0].lo, isolated[0].hi, w);
            RealInterval r1 = bracket_root(inst->f, isolated[1].lo, isolated[1].hi, w);
            RealInterval m0 = mu_interval(r0), m1 = mu_interval(r1);
            RealInterval lm0 = log_interval(m0.abs(), prec.terms, prec.bits);
            RealInterval lm1 = log_interval(m1.abs(), prec.terms, prec.bits);
            RealInterval lr0 = log_interval(r0.abs(), prec.terms, prec.bits);
            RealInterval lr1 = log_interval(r1.abs(), prec.terms, prec.bits);
            RealInterval reg = lm0 * lr1 - lr0 * lm1;
            if (!reg.contains_zero()) return true;
        } catch (const precision_exhausted&) {
            continue;
        }
    }
    return false;
}

bool cubic_bound_chain(const Integer& n, int precision_budget) {
    if (n < 7 || !admissible(FamilyId::cubic, n))
        throw label_unavailable("the bound chain is stated for n >= 7");
    auto inst = make_instance(FamilyId::cubic, n);
    auto isolated = isolate_real_roots(inst->f);
    if (isolated.size() != 3) return false;
    for (int level = 0; level < precision_budget; ++level) {
        Precision prec = level_precision(level);
        try {
            Rational w = width_of(prec.width_bits);
            RealInterval r0 = bracket_root(inst->f, isolated[0].lo, isolated[0].hi, w);
            RealInterval r1 = bracket_root(inst->f, isolated[1].lo, isolated[1].hi, w);
            RealInterval m0 = mu_interval(r0).abs(), m1 = mu_interval(r1).abs();
            Rational ub1 = make_rational(27, 2 * n * n * (n + 1));
            Rational lb0 = make_rational(pow_i(n - 3, 3), 2 * (n - 1));
            bool ok = m1.hi < ub1 && ub1 < 1 && m0.lo > lb0 && lb0 > 1;
            if (ok) return true;
        } catch (const precision_exhausted&) {
            continue;
        }
    }
    return false;
}

std::vector<LabeledRoot> ordered_real_roots(const InstancePtr& inst, bool require_labels) {
    std::vector<LabeledRoot> out;
    Precision prec = level_precision(0);
    Rational w = width_of(prec.width_bits);
    switch (inst->family) {
    case FamilyId::sextic: {
        bool labeled = inst->n >= 76;
        if (require_labels && !labeled)
            throw label_unavailable("sextic phi_n interval labels are stated for n >= 76");
        for (const auto& iv : isolate_real_roots(inst->f)) {
            RealInterval enc = bracket_root(inst->f, iv.lo, iv.hi, w);
            out.push_back({enc.lo > 1 ? std::optional<std::string>("rho0") : std::nullopt, enc});
        }
        if (labeled) {
            // verify the published phi_n containments by sign change
            RatPoly phi = RatPoly::from_int(phi_poly(inst->n));
            struct Row { const char* label; Rational lo, hi; };
            const Integer& n = inst->n;
            std::vector<Row> rows{
                {"rho0/rho3", Rational(3 - n), Rational(4 - n)},
                {"rho1/rho4", Rational(-1), Rational(-9, 10)},
                {"rho2/rho5", make_rational(1, n + 5), make_rational(1, n + 4)}};
            for (const auto& s : rows) {
                if (sign(phi.eval(s.lo)) * sign(phi.eval(s.hi)) >= 0)
                    throw label_unavailable("phi_n containment failed at n = " + to_string(n));
                RealInterval enc = bracket_root(phi, s.lo, s.hi, w);
                out.push_back({std::string(s.label), enc});
            }
        }
        return out;
    }
    case FamilyId::quartic: {
        for (const auto& iv : isolate_real_roots(inst->f)) {
            RealInterval enc = bracket_root(inst->f, iv.lo, iv.hi, w);
            out.push_back({enc.lo > 1 ? std::optional<std::string>("rho0") : std::nullopt, enc});
        }
        return out;
    }
    case FamilyId::cubic: {
        const Integer& n = inst->n;
        auto isolated = isolate_real_roots(inst->f);
        if (isolated.size() != 3)
            throw label_unavailable("expected three real roots at n = " + to_string(n));
        RealInterval r0 = bracket_root(inst->f, isolated[0].lo, isolated[0].hi, w);
        RealInterval r1 = bracket_root(inst->f, isolated[1].lo, isolated[1].hi, w);
        RealInterval r2 = bracket_root(inst->f, isolated[2].lo, isolated[2].hi, w);
        // published containments: rho0 in (1-n, 2-n); rho1 in (-1-4/n, -1-1/n)
        // (intro) or (-1-3/n, -1-1/n) for n >= 7; rho2 in (1/(n+1), 1/n)
        auto inside = [](const RealInterval& e, const Rational& lo, const Rational& hi) {
            return lo < e.lo && e.hi < hi;
        };
        bool ok0 = inside(r0, Rational(1 - n), Rational(2 - n));
        bool ok2 = inside(r2, make_rational(1, n + 1), make_rational(1, n));
        bool wide1 = inside(r1, Rational(-1) - make_rational(4, n), Rational(-1) - make_rational(1, n));
        bool tight1 = n >= 7 && inside(r1, Rational(-1) - make_rational(3, n),
                                       Rational(-1) - make_rational(1, n));
        if (require_labels && !(ok0 && ok2 && (wide1 || tight1)))
            throw label_unavailable("cubic containments failed at n = " + to_string(n));
        out.push_back({ok0 ? std::optional<std::string>("rho0") : std::nullopt, r0});
        std::string l1 = tight1 ? "rho1(tight)" : "rho1";
        out.push_back({(wide1 || tight1) ? std::optional<std::string>(l1) : std::nullopt, r1});
        out.push_back({ok2 ? std::optional<std::string>("rho2") : std::nullopt, r2});
        return out;
    }
    }
    throw error("unreachable");
}

} // namespace classforge
