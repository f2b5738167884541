#include "classforge/search.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "classforge/mod_factor.hpp"
#include "classforge/modular.hpp"
#include "classforge/primality.hpp"
#include "classforge/resultant.hpp"

namespace classforge {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

} // namespace

void apply_config_entry(SearchConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "scan_bound") cfg.scan_bound = parse_decimal(value);
    else if (key == "m_max") cfg.m_max = std::stol(value);
    else if (key == "factor_budget") cfg.factor_budget = std::stoull(value);
    else if (key == "precision_budget") cfg.precision_budget = std::stoi(value);
    else if (key == "jobs") cfg.jobs = std::stoi(value);
    else throw error("unknown config key: " + key);
}

SearchConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open config file: " + path);
    SearchConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw error("bad config line: " + line);
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

BauerWitness find_bauer_prime(const Integer& p, const std::vector<ResidueCondition>& conditions,
                              const std::vector<Integer>& avoid, const Integer& floor_value,
                              const Integer& bound) {
    for (Integer ell = p + 1;; ell += p) {
        if (ell > bound)
            throw bound_exhausted("no qualifying prime = 1 mod " + to_string(p) + " below " +
                                  to_string(bound));
        if (ell <= floor_value) continue;
        if (std::find(avoid.begin(), avoid.end(), ell) != avoid.end()) continue;
        if (!is_prime(ell)) continue;
        bool ok = true;
        BauerWitness w;
        for (const auto& cond : conditions) {
            if (sign(floor_mod(cond.base, ell)) == 0) { ok = false; break; }
            Symbol s = power_residue_symbol(cond.base, ell, p);
            if (s != cond.want) { ok = false; break; }
            w.transcript.emplace_back(cond.base, s);
        }
        if (!ok) continue;
        w.p = p;
        w.ell = ell;
        w.slot = 0;
        return w;
    }
}

namespace {

std::vector<ResidueCondition> slot_conditions(FamilyId family, int slot) {
    std::vector<ResidueCondition> out;
    for (const auto& [base, sym] : witness_conditions(family, slot)) out.push_back({base, sym});
    return out;
}

std::vector<Integer> prime_divisors(const Integer& r) {
    std::vector<Integer> out;
    for (const auto& [p, e] : factorize(r).factors) out.push_back(p);
    return out;
}

// Smallest positive s = s0 (mod mod_s) with gcd(s, coprime_to) = 1.
Integer steer_cofactor(const Integer& s0, const Integer& mod_s, const Integer& coprime_to) {
    Integer s = floor_mod(s0, mod_s);
    if (sign(s) == 0) s = mod_s;
    while (gcd(s, coprime_to) != 1) s += mod_s;
    return s;
}

} // namespace

CrResult build_cr(FamilyId family, const Integer& r, const Integer& q, const SearchConfig& cfg) {
    if (family == FamilyId::cubic)
        throw non_galois_family("c_r exists for the Galois families only");
    if (family == FamilyId::sextic && gcd(r, Integer(6)) != 1)
        throw gcd_constraint_violated("sextic requires gcd(r, 6) = 1");
    if (family == FamilyId::quartic && mpz_even_p(r.get_mpz_t()))
        throw gcd_constraint_violated("quartic requires odd r");

    // sextic witnesses must be coprime to 210q, quartic ones to 30q
    std::vector<Integer> avoid{2, 3, 5};
    if (family == FamilyId::sextic) avoid.push_back(7);
    if (q > 1) avoid.push_back(q);

    CrResult out;
    Integer prod = 1;
    for (const auto& p : prime_divisors(r)) {
        for (int slot = 1; slot <= 2; ++slot) {
            BauerWitness w =
                find_bauer_prime(p, slot_conditions(family, slot), avoid, 0, cfg.scan_bound);
            w.slot = slot;
            prod *= w.ell;
            out.witnesses.push_back(std::move(w));
        }
    }

    if (family == FamilyId::sextic) {
        // c_r^r = 7^(1-r) (mod 30): pick a = r^{-1} (mod 4) and steer
        // s * prod = 7^((1-r)a) (mod 30); 7 has order 4 mod 30.
        Integer a = inv_mod(floor_mod(r, 4), Integer(4)).value;
        Integer e = floor_mod((1 - r) * a, Integer(4));
        Integer target = mod_pow(7, e, 30).value;
        Integer s0 = floor_mod(target * inv_mod(floor_mod(prod, 30), Integer(30)).value, Integer(30));
        out.s = steer_cofactor(s0, 30, 7 * q);
        out.c_r = out.s * prod;
        if (mod_pow(out.c_r, r, 30).value != mod_pow(7, floor_mod(1 - r, Integer(4)), 30).value)
            throw identity_violation("c_r congruence steering failed");
        if (gcd(out.c_r, 210 * q) != 1)
            throw identity_violation("c_r not coprime to 210q");
    } else {
        Integer s0 = inv_mod(floor_mod(prod, 6), Integer(6)).value;
        out.s = steer_cofactor(s0, 6, 5 * q);
        out.c_r = out.s * prod;
        if (floor_mod(out.c_r, 6) != 1) throw identity_violation("c_r != 1 (mod 6)");
        if (gcd(out.c_r, 5 * q) != 1) throw identity_violation("c_r not coprime to 5q");
    }
    return out;
}

YN construct_y_n(FamilyId family, const Integer& r, const Integer& c_r, const Integer& y0,
                 const Integer& q, const Integer& m) {
    if (r < 1) throw gcd_constraint_violated("r must be positive");
    unsigned long ru = r.get_ui();
    YN out;
    switch (family) {
    case FamilyId::sextic: {
        Integer base = floor_mod(c_r * (30 * y0 - 143), Integer(8));
        Integer d8 = floor_mod(5 * inv_mod(base, Integer(8)).value, Integer(8));
        // d = d8 (mod 8), d = 1 (mod 30 q^2), d = 1 (mod 7): keeps 7 out of y
        ResidueClass d = crt({{d8, 8}, {1, 30 * q * q}, {1, 7}});
        out.d = sign(d.value) == 0 ? d.modulus : d.value;
        Integer F = 30 * (y0 + 8 * q * q * m) - 143;
        out.y = out.d * c_r * F;
        if (mpz_divisible_ui_p(out.y.get_mpz_t(), 7))
            throw congruence_violated("7 divides y at m = " + to_string(m));
        Integer ypow = pow_i(out.y, ru);
        out.n = divexact(ypow + 143, Integer(30));
        if (floor_mod(out.n, 4) != 2)
            throw identity_violation("constructed n is not 2 mod 4");
        return out;
    }
    case FamilyId::quartic: {
        out.d = 1;
        out.y = c_r * (30 * (y0 + q * q * m) - 1);
        if (mpz_divisible_ui_p(out.y.get_mpz_t(), 5))
            throw congruence_violated("5 divides y at m = " + to_string(m));
        Integer ypow = pow_i(out.y, ru);
        out.n = divexact(ypow + 7, Integer(6));
        return out;
    }
    case FamilyId::cubic: {
        out.d = 1;
        out.y = c_r; // the assembled witness product s * prod ell_{i,p}
        if (floor_mod(out.y, 6) != 1)
            throw congruence_violated("cubic witness product is not 1 mod 6");
        if (mod_pow(out.y, r, 4).value == 3) out.y = out.y * out.y;
        Integer ypow = pow_i(out.y, ru);
        out.n = divexact(ypow - 7, Integer(6));
        if (!mpz_odd_p(out.n.get_mpz_t()) || out.n < 5)
            throw identity_violation("constructed cubic n is not an odd integer >= 5");
        return out;
    }
    }
    throw error("unreachable");
}

RamifiedSetup ramified_prime_setup(FamilyId family, const Integer& r, const Integer& q,
                                   const Integer& c_r) {
    if (family == FamilyId::cubic)
        throw non_galois_family("ramified targeting applies to the Galois families");
    Integer forbidden = family == FamilyId::sextic ? Integer(210) : Integer(5);
    if (!is_prime(q)) throw prime_inadmissible("q must be prime");
    if (gcd(q, forbidden * r) != 1)
        throw prime_inadmissible("q divides " + to_string(forbidden) + "r");
    // the quartic construction also needs 30 c_r invertible mod q^2
    if (gcd(q, Integer(30)) != 1) throw prime_inadmissible("q divides 30");
    if (!splits_linearly_mod(script_P(family, static_cast<unsigned>(r.get_ui())), q))
        throw prime_inadmissible("script-P does not split into linear factors mod q");

    Integer D0 = family == FamilyId::sextic ? 108 : 16;
    auto root = sqrt_mod_prime(-D0, q);
    if (!root || sign(*root) == 0)
        throw prime_inadmissible("-" + to_string(D0) + " is not a square mod q");
    RamifiedSetup out;
    out.n0 = *root;
    Integer q2 = q * q;
    if (floor_mod(out.n0 * out.n0 + D0, q2) == 0) out.n0 += q;

    auto linear_at = [&](const Integer& n) {
        return family == FamilyId::sextic ? Integer(30 * n - 143) : Integer(6 * n - 7);
    };
    Integer target = floor_mod(linear_at(out.n0), q);
    if (sign(target) == 0) throw prime_inadmissible("q divides the special value at n0");
    // an r-th root mod q exists because script-P splits
    IntPoly xr_minus = IntPoly::monomial(1, static_cast<int>(r.get_ui())) - IntPoly::constant(target);
    auto roots = roots_mod_prime(xr_minus, q);
    if (roots.empty()) throw prime_inadmissible("no r-th root of the special value mod q");
    Integer b0 = roots.front();

    // Hensel lift to q^2: q does not divide r b0^(r-1)
    Integer target2 = floor_mod(linear_at(out.n0), q2);
    Integer delta = floor_mod(target2 - mod_pow(b0, r, q2).value, q2);
    Integer deriv = floor_mod(r * mod_pow(b0, r - 1, q).value, q);
    Integer t = floor_mod(divexact(delta, q) * inv_mod(deriv, q).value, q);
    out.b0 = floor_mod(b0 + q * t, q2);
    if (mod_pow(out.b0, r, q2).value != target2)
        throw identity_violation("Hensel lift failed");

    // y0 with b0 = c_r (30 y0 - 143) (mod q^2) (sextic) or c_r (30 y0 - 1) (quartic)
    Integer shift = family == FamilyId::sextic ? 143 : 1;
    out.y0 = floor_mod((out.b0 + shift * c_r) * inv_mod(30 * c_r, q2).value, q2);
    if (floor_mod(c_r * (30 * out.y0 - shift) - out.b0, q2) != 0)
        throw identity_violation("y0 congruence failed");
    return out;
}

Integer find_splitting_prime(FamilyId family, const Integer& r, const Integer& bound) {
    Integer forbidden = family == FamilyId::sextic ? Integer(210) : Integer(5);
    IntPoly P = script_P(family, static_cast<unsigned>(r.get_ui()));
    for (Integer q = 7; q <= bound; q = next_prime(q)) {
        if (gcd(q, forbidden * r) != 1 || gcd(q, Integer(30)) != 1) continue;
        if (splits_linearly_mod(P, q)) return q;
    }
    throw bound_exhausted("no splitting prime below " + to_string(bound));
}

namespace {

// Scans for one nonpower evidence entry for (p, n): a split prime ell = 1
// (mod p) where the target image is a p-th power nonresidue.
std::optional<NonPowerEvidence> scan_nonpower(FamilyId family, const Integer& n, const Integer& y,
                                              const Integer& p, const Integer& bound) {
    for (Integer ell = p + 1;; ell += p) {
        if (ell > bound) return std::nullopt;
        if (!is_prime(ell)) continue;
        if (mpz_divisible_p(y.get_mpz_t(), ell.get_mpz_t())) continue;
        if (mpz_even_p(ell.get_mpz_t())) continue;
        // ell | disc numerator iff ell | 3 (n^2 + c) for odd ell
        Integer c = family == FamilyId::sextic ? 108 : 16;
        if (floor_mod(3 * (n * n + c), ell) == 0) continue;
        IntPoly f = defining_poly_mod(family, n, ell);
        if (f.degree() != family_degree(family)) continue; // lc vanished
        for (const auto& t : roots_mod_prime(f, ell)) {
            auto img = target_image_mod(family, t, ell);
            if (!img) continue;
            if (power_residue_symbol(*img, ell, p) == Symbol::nonresidue)
                return NonPowerEvidence{p, ell, t, *img};
        }
    }
}

struct GaloisAttempt {
    FamilyId family;
    Integer r;
    CrResult cr;
    Integer y0;
    std::optional<RamifiedSetup> ram;
    Integer q; // 1 when not targeting a ramified prime
    const SearchConfig* cfg;

    std::optional<ClassOrderCertificate> try_m(const Integer& m) const {
        ClassOrderCertificate cert;
        cert.family = family;
        cert.r = r;
        cert.c_r = cr.c_r;
        cert.bauer_witnesses = cr.witnesses;
        YN yn;
        try {
            yn = construct_y_n(family, r, cr.c_r, y0, q, m);
        } catch (const congruence_violated&) {
            return std::nullopt;
        }
        if (!admissible(family, yn.n)) return std::nullopt;
        cert.y = yn.y;
        cert.n = yn.n;

        PrimeFactorization fac;
        try {
            fac = factorize(cert.y, cfg->factor_budget);
        } catch (const factorization_timeout&) {
            return std::nullopt;
        }
        for (const auto& ex : excluded_primes(family))
            if (fac.valuation(ex) > 0) return std::nullopt;
        Integer point = special_point(family);
        for (const auto& [ell, e] : fac.factors)
            cert.ideal_factors.push_back({ell, floor_mod(point, ell), r * Integer(e)});

        for (const auto& p : prime_divisors(r)) {
            auto ev = scan_nonpower(family, cert.n, cert.y, p, cfg->scan_bound);
            if (!ev) return std::nullopt;
            cert.nonpower_evidence.push_back(std::move(*ev));
        }

        // opportunistic irreducibility evidence for small instances
        if (bit_length(cert.n) <= 256 && r <= 7) {
            auto verdict = irreducibility_over_Q(
                pnr_poly(family, cert.n, static_cast<unsigned>(r.get_ui())).primitive_part());
            if (verdict.status == IrreducibilityVerdict::Status::irreducible)
                cert.pnr_evidence.push_back({*verdict.evidence});
        }

        if (ram) cert.ramified = RamifiedData{q, ram->n0};
        if (!verify_certificate(cert).valid) return std::nullopt;
        return cert;
    }
};

ClassOrderCertificate galois_search(FamilyId family, const Integer& r, const SearchConfig& cfg,
                                    std::optional<Integer> ramified_q) {
    GaloisAttempt at;
    at.family = family;
    at.r = r;
    at.q = ramified_q.value_or(1);
    at.cfg = &cfg;
    at.cr = build_cr(family, r, at.q, cfg);
    if (ramified_q) {
        at.ram = ramified_prime_setup(family, r, *ramified_q, at.cr.c_r);
        at.y0 = at.ram->y0;
    } else {
        at.y0 = 0;
    }

    int jobs = std::max(1, cfg.jobs);
    for (long block = 0; block <= cfg.m_max; block += jobs) {
        long count = std::min<long>(jobs, cfg.m_max - block + 1);
        std::vector<std::optional<ClassOrderCertificate>> results(count);
        if (count == 1) {
            results[0] = at.try_m(Integer(block));
        } else {
            std::vector<std::thread> workers;
            for (long i = 0; i < count; ++i)
                workers.emplace_back(
                    [&, i] { results[i] = at.try_m(Integer(block + i)); });
            for (auto& w : workers) w.join();
        }
        for (auto& res : results)
            if (res) return std::move(*res);
    }
    throw search_exhausted("no certificate found for m <= " + std::to_string(cfg.m_max));
}

ClassOrderCertificate cubic_search(const Integer& r, const SearchConfig& cfg) {
    std::vector<Integer> avoid{2, 3, 37, 47};
    Integer floor_value = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        ClassOrderCertificate cert;
        cert.family = FamilyId::cubic;
        cert.r = r;
        Integer prod = 1;
        for (const auto& p : prime_divisors(r)) {
            for (int slot = 1; slot <= 3; ++slot) {
                BauerWitness w = find_bauer_prime(p, slot_conditions(FamilyId::cubic, slot), avoid,
                                                  floor_value, cfg.scan_bound);
                w.slot = slot;
                prod *= w.ell;
                cert.bauer_witnesses.push_back(std::move(w));
            }
        }
        Integer s0 = inv_mod(floor_mod(prod, 6), Integer(6)).value;
        Integer s = steer_cofactor(s0, 6, Integer(37 * 47));
        YN yn = construct_y_n(FamilyId::cubic, r, s * prod, 0, 1, 0);
        cert.y = yn.y;
        cert.n = yn.n;
        PrimeFactorization fac = factorize(cert.y, cfg.factor_budget);
        for (const auto& [ell, e] : fac.factors)
            cert.ideal_factors.push_back({ell, floor_mod(Integer(2), ell), r * Integer(e)});
        if (verify_certificate(cert).valid) return cert;
        floor_value = cert.bauer_witnesses.back().ell; // rescan higher
    }
    throw search_exhausted("cubic search failed after floor escalation");
}

} // namespace

ClassOrderCertificate run_search(FamilyId family, const Integer& r, const SearchConfig& cfg,
                                 std::optional<Integer> ramified_q) {
    switch (family) {
    case FamilyId::sextic:
        if (gcd(r, Integer(6)) != 1)
            throw gcd_constraint_violated("sextic requires gcd(r, 6) = 1");
        return galois_search(family, r, cfg, ramified_q);
    case FamilyId::quartic:
        if (r < 1 || mpz_even_p(r.get_mpz_t()))
            throw gcd_constraint_violated("quartic requires odd r >= 1");
        return galois_search(family, r, cfg, ramified_q);
    case FamilyId::cubic:
        if (r < 1 || floor_mod(r, Integer(3)) == 0)
            throw gcd_constraint_violated("cubic requires r not divisible by 3");
        if (ramified_q)
            throw non_galois_family("ramified targeting applies to the Galois families");
        return cubic_search(r, cfg);
    }
    throw error("unreachable");
}

} // namespace classforge
