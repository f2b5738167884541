#include "classforge/certificate.hpp"

#include <algorithm>
#include <json.hpp>

#include "classforge/factorization.hpp"
#include "classforge/mod_factor.hpp"
#include "classforge/modular.hpp"
#include "classforge/primality.hpp"
#include "classforge/resultant.hpp"

namespace classforge {

using nlohmann::json;

const std::vector<std::pair<Integer, Symbol>>& witness_conditions(FamilyId family, int slot) {
    using P = std::pair<Integer, Symbol>;
    static const std::vector<P> sx1{{2, Symbol::residue}, {3, Symbol::residue}, {5, Symbol::nonresidue}};
    static const std::vector<P> sx2{{3, Symbol::residue}, {5, Symbol::residue}, {2, Symbol::nonresidue}};
    static const std::vector<P> qu1{{2, Symbol::residue}, {3, Symbol::nonresidue}};
    static const std::vector<P> qu2{{3, Symbol::residue}, {2, Symbol::nonresidue}};
    static const std::vector<P> cu1{{2, Symbol::residue}, {37, Symbol::residue}, {3, Symbol::nonresidue}};
    static const std::vector<P> cu2{{37, Symbol::residue}, {2, Symbol::nonresidue}, {3, Symbol::nonresidue}};
    static const std::vector<P> cu3{{37, Symbol::nonresidue}};
    switch (family) {
    case FamilyId::sextic:
        if (slot == 1) return sx1;
        if (slot == 2) return sx2;
        break;
    case FamilyId::quartic:
        if (slot == 1) return qu1;
        if (slot == 2) return qu2;
        break;
    case FamilyId::cubic:
        if (slot == 1) return cu1;
        if (slot == 2) return cu2;
        if (slot == 3) return cu3;
        break;
    }
    throw error("witness_conditions: bad slot");
}

int witness_slot_count(FamilyId family) {
    return family == FamilyId::cubic ? 3 : 2;
}

namespace {

bool divides(const Integer& d, const Integer& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer disc_numerator(FamilyId family, const Integer& n) {
    return numerator(discriminant(defining_poly(family, n)));
}

std::vector<Integer> prime_divisors_of_r(const Integer& r) {
    std::vector<Integer> out;
    for (const auto& [p, e] : factorize(r).factors) out.push_back(p);
    return out;
}

bool r_constraint_ok(FamilyId family, const Integer& r) {
    if (r < 1) return false;
    switch (family) {
    case FamilyId::sextic: return gcd(r, Integer(6)) == 1;
    case FamilyId::quartic: return mpz_odd_p(r.get_mpz_t()) != 0;
    case FamilyId::cubic: return floor_mod(r, Integer(3)) != 0;
    }
    return false;
}

unsigned r_as_unsigned(const Integer& r) {
    if (r < 1 || r > 1000000) throw error("r out of range");
    return static_cast<unsigned>(r.get_ui());
}

} // namespace

Verdict verify_ideal_power(const ClassOrderCertificate& cert) {
    try {
        if (!admissible(cert.family, cert.n))
            return Verdict::fail("n is not admissible for the family");
        if (sign(cert.y) == 0) return Verdict::fail("y = 0");
        if (cert.r < 1 || cert.r > 1000000) return Verdict::fail("r out of range");
        if (cert.family == FamilyId::sextic && floor_mod(cert.n, 4) != 2)
            return Verdict::fail("sextic certificates require n = 2 (mod 4)");

        Integer sv = special_value(cert.family, cert.n);
        Integer ypow;
        mpz_pow_ui(ypow.get_mpz_t(), cert.y.get_mpz_t(), cert.r.get_ui());
        if (ypow != sv)
            return Verdict::fail("y^r does not equal the special value");

        for (const auto& p : excluded_primes(cert.family))
            if (divides(p, cert.y))
                return Verdict::fail("excluded prime " + to_string(p) + " divides y");
        if (cert.family == FamilyId::cubic && divides(Integer(37), sv))
            return Verdict::fail("excluded prime 37 divides special value");

        PrimeFactorization fac = factorize(cert.y);
        Integer dnum = disc_numerator(cert.family, cert.n);
        Integer point = special_point(cert.family);

        if (cert.ideal_factors.size() != fac.factors.size())
            return Verdict::fail("ideal factor list does not match the factorization of y");
        for (const auto& [p, e] : fac.factors) {
            auto it = std::find_if(cert.ideal_factors.begin(), cert.ideal_factors.end(),
                                   [&](const IdealFactorCert& c) { return c.ell == p; });
            if (it == cert.ideal_factors.end())
                return Verdict::fail("missing ideal factor certificate for " + to_string(p));
            if (it->root < 0 || it->root >= p) return Verdict::fail("root out of range");
            if (it->root != floor_mod(point, p))
                return Verdict::fail("root is not the special point mod " + to_string(p));
            if (eval_fn_mod(cert.family, cert.n, it->root, p) != 0)
                return Verdict::fail("f_n(root) != 0 mod " + to_string(p));
            if (divides(p, dnum))
                return Verdict::fail("witness prime " + to_string(p) + " divides disc numerator");
            if (it->exponent != cert.r * Integer(e))
                return Verdict::fail("exponent bookkeeping mismatch at " + to_string(p));
        }
        return Verdict::ok();
    } catch (const error& e) {
        return Verdict::fail(std::string("ideal-power check error: ") + e.what());
    }
}

Verdict verify_residue_conditions(const ClassOrderCertificate& cert) {
    try {
        auto ps = prime_divisors_of_r(cert.r);
        int slots = witness_slot_count(cert.family);
        size_t expected = ps.size() * static_cast<size_t>(slots);
        if (cert.bauer_witnesses.size() != expected)
            return Verdict::fail("missing witness: expected " + std::to_string(expected) +
                                 " bauer witnesses");
        for (const auto& p : ps) {
            for (int slot = 1; slot <= slots; ++slot) {
                auto it = std::find_if(cert.bauer_witnesses.begin(), cert.bauer_witnesses.end(),
                                       [&](const BauerWitness& w) {
                                           return w.p == p && w.slot == slot;
                                       });
                if (it == cert.bauer_witnesses.end())
                    return Verdict::fail("missing witness for p = " + to_string(p) + " slot " +
                                         std::to_string(slot));
                if (!is_prime(it->ell)) return Verdict::fail("witness is not prime");
                if (floor_mod(it->ell, p) != 1)
                    return Verdict::fail("witness is not 1 mod p");
                for (const auto& ex : excluded_primes(cert.family))
                    if (it->ell == ex) return Verdict::fail("witness prime is excluded");
                if (!divides(it->ell, cert.y))
                    return Verdict::fail("witness prime does not divide y");
                const auto& req = witness_conditions(cert.family, slot);
                if (it->transcript.size() != req.size())
                    return Verdict::fail("transcript length mismatch");
                for (size_t i = 0; i < req.size(); ++i) {
                    if (it->transcript[i].first != req[i].first)
                        return Verdict::fail("transcript base mismatch");
                    if (it->transcript[i].second != req[i].second)
                        return Verdict::fail("transcript symbol does not meet the condition");
                    Symbol actual = power_residue_symbol(req[i].first, it->ell, p);
                    if (actual != it->transcript[i].second)
                        return Verdict::fail("transcript symbol fails re-evaluation at ell = " +
                                             to_string(it->ell));
                }
            }
        }
        return Verdict::ok();
    } catch (const error& e) {
        return Verdict::fail(std::string("residue-condition check error: ") + e.what());
    }
}

Verdict verify_nonpower(const ClassOrderCertificate& cert) {
    try {
        if (cert.family == FamilyId::cubic) {
            if (!cert.nonpower_evidence.empty())
                return Verdict::fail("cubic certificates carry no nonpower evidence");
            if (!cert.pnr_evidence.empty())
                return Verdict::fail("cubic certificates carry no p_{n,r} evidence");
            return Verdict::ok(); // covered structurally by the witness triples
        }
        auto ps = prime_divisors_of_r(cert.r);
        if (cert.nonpower_evidence.size() != ps.size())
            return Verdict::fail("expected one nonpower evidence entry per prime divisor of r");
        Integer dnum = disc_numerator(cert.family, cert.n);
        for (const auto& p : ps) {
            auto it = std::find_if(cert.nonpower_evidence.begin(), cert.nonpower_evidence.end(),
                                   [&](const NonPowerEvidence& e) { return e.p == p; });
            if (it == cert.nonpower_evidence.end())
                return Verdict::fail("missing nonpower evidence for p = " + to_string(p));
            if (!is_prime(it->ell)) return Verdict::fail("evidence prime is not prime");
            if (floor_mod(it->ell, p) != 1)
                return Verdict::fail("evidence prime is not 1 mod p");
            if (divides(it->ell, dnum))
                return Verdict::fail("ramified evidence prime");
            if (it->root < 0 || it->root >= it->ell)
                return Verdict::fail("evidence root out of range");
            if (eval_fn_mod(cert.family, cert.n, it->root, it->ell) != 0)
                return Verdict::fail("evidence root is not a root of f_n mod ell");
            auto img = target_image_mod(cert.family, it->root, it->ell);
            if (!img)
                return Verdict::fail("denominator vanishes at evidence prime " + to_string(it->ell));
            if (*img != floor_mod(it->value, it->ell))
                return Verdict::fail("recorded image differs from recomputation");
            if (power_residue_symbol(*img, it->ell, p) != Symbol::nonresidue)
                return Verdict::fail("evidence value is a p-th power residue");
        }
        if (!cert.pnr_evidence.empty()) {
            IntPoly pnr = pnr_poly(cert.family, cert.n, r_as_unsigned(cert.r));
            for (const auto& ev : cert.pnr_evidence)
                if (!recheck_evidence(pnr, ev.evidence))
                    return Verdict::fail("attached p_{n,r} irreducibility evidence fails recheck");
        }
        return Verdict::ok();
    } catch (const error& e) {
        return Verdict::fail(std::string("nonpower check error: ") + e.what());
    }
}

Verdict verify_certificate(const ClassOrderCertificate& cert) {
    try {
        if (cert.version != "1") return Verdict::fail("unsupported certificate version");
        if (!r_constraint_ok(cert.family, cert.r))
            return Verdict::fail("r violates the family gcd constraint");
        if (Verdict v = verify_ideal_power(cert); !v.valid) return v;
        if (Verdict v = verify_residue_conditions(cert); !v.valid) return v;
        if (Verdict v = verify_nonpower(cert); !v.valid) return v;

        if (cert.family != FamilyId::cubic) {
            auto inst = make_instance(cert.family, cert.n);
            for (const auto& nrm : w_subfield_norms(inst))
                if (!(nrm == FieldElement::one(inst)))
                    return Verdict::fail("subfield norm of w is not 1");
        }

        if (cert.ramified) {
            if (cert.family == FamilyId::cubic)
                return Verdict::fail("ramified data is not defined for the cubic family");
            const Integer& q = cert.ramified->q;
            if (!is_prime(q)) return Verdict::fail("ramified q is not prime");
            Integer forbidden = cert.family == FamilyId::sextic ? Integer(210) : Integer(5);
            if (divides(q, forbidden * cert.r))
                return Verdict::fail("q divides the forbidden product");
            Integer D = cert.family == FamilyId::sextic ? Integer(cert.n * cert.n + 108)
                                                        : Integer(cert.n * cert.n + 16);
            if (!divides(q, D)) return Verdict::fail("q does not divide n^2 + c");
            if (divides(q * q, D)) return Verdict::fail("q^2 divides n^2 + c");
            if (floor_mod(cert.n - cert.ramified->n0, q * q) != 0)
                return Verdict::fail("n is not congruent to n0 mod q^2");
        }
        return Verdict::ok();
    } catch (const error& e) {
        return Verdict::fail(std::string("certificate check error: ") + e.what());
    }
}

// ------------------------------------------------------------- serialization

namespace {

json witness_to_json(const BauerWitness& w) {
    json t = json::array();
    for (const auto& [base, sym] : w.transcript)
        t.push_back(json::array({to_string(base), to_string(sym)}));
    return json{{"ell", to_string(w.ell)},
                {"p", to_string(w.p)},
                {"slot", std::to_string(w.slot)},
                {"transcript", t}};
}

json evidence_to_json(const IrreducibilityEvidence& e) {
    switch (e.kind) {
    case IrreducibilityEvidence::Kind::mod_prime:
        return json{{"kind", "mod_prime"}, {"prime", to_string(e.prime)}};
    case IrreducibilityEvidence::Kind::eisenstein_shift:
        return json{{"kind", "eisenstein_shift"},
                    {"prime", to_string(e.prime)},
                    {"shift", to_string(e.shift)}};
    case IrreducibilityEvidence::Kind::degree_sets: {
        json arr = json::array();
        for (const auto& p : e.primes) arr.push_back(to_string(p));
        return json{{"kind", "degree_sets"}, {"primes", arr}};
    }
    }
    throw error("unreachable");
}

Symbol symbol_from_string(const std::string& s) {
    if (s == "residue") return Symbol::residue;
    if (s == "nonresidue") return Symbol::nonresidue;
    throw malformed_certificate("unknown symbol: " + s);
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw malformed_certificate(std::string("missing field: ") + key);
    return *it;
}

Integer int_field(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_string()) throw malformed_certificate(std::string(key) + " must be a decimal string");
    return parse_decimal(v.get<std::string>());
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw malformed_certificate("unknown field: " + it.key());
    }
}

} // namespace

std::string serialize(const ClassOrderCertificate& cert) {
    ClassOrderCertificate c = cert;
    std::sort(c.bauer_witnesses.begin(), c.bauer_witnesses.end(),
              [](const BauerWitness& a, const BauerWitness& b) {
                  return std::tie(a.p, a.slot) < std::tie(b.p, b.slot);
              });
    std::sort(c.ideal_factors.begin(), c.ideal_factors.end(),
              [](const IdealFactorCert& a, const IdealFactorCert& b) { return a.ell < b.ell; });
    std::sort(c.nonpower_evidence.begin(), c.nonpower_evidence.end(),
              [](const NonPowerEvidence& a, const NonPowerEvidence& b) { return a.p < b.p; });

    json j;
    j["family"] = to_string(c.family);
    j["r"] = to_string(c.r);
    j["n"] = to_string(c.n);
    j["y"] = to_string(c.y);
    j["version"] = c.version;
    if (c.c_r) j["c_r"] = to_string(*c.c_r);
    json bw = json::array();
    for (const auto& w : c.bauer_witnesses) bw.push_back(witness_to_json(w));
    j["bauer_witnesses"] = bw;
    json idf = json::array();
    for (const auto& f : c.ideal_factors)
        idf.push_back(json{{"ell", to_string(f.ell)},
                           {"exponent", to_string(f.exponent)},
                           {"root", to_string(f.root)}});
    j["ideal_factors"] = idf;
    if (!c.nonpower_evidence.empty()) {
        json np = json::array();
        for (const auto& e : c.nonpower_evidence)
            np.push_back(json{{"ell", to_string(e.ell)},
                              {"p", to_string(e.p)},
                              {"root", to_string(e.root)},
                              {"symbol", "nonresidue"},
                              {"value", to_string(e.value)}});
        j["nonpower_evidence"] = np;
    }
    if (!c.pnr_evidence.empty()) {
        json pe = json::array();
        for (const auto& e : c.pnr_evidence) pe.push_back(evidence_to_json(e.evidence));
        j["pnr_evidence"] = pe;
    }
    if (c.ramified)
        j["ramified_q"] = json{{"n0", to_string(c.ramified->n0)}, {"q", to_string(c.ramified->q)}};
    return j.dump();
}

ClassOrderCertificate parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw malformed_certificate(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw malformed_certificate("certificate must be a JSON object");
    check_keys(j, {"family", "r", "n", "y", "c_r", "bauer_witnesses", "ideal_factors",
                   "nonpower_evidence", "pnr_evidence", "ramified_q", "version"});

    ClassOrderCertificate c;
    const json& fam = require(j, "family");
    if (!fam.is_string()) throw malformed_certificate("family must be a string");
    try {
        c.family = family_from_string(fam.get<std::string>());
    } catch (const error& e) {
        throw malformed_certificate(e.what());
    }
    c.r = int_field(j, "r");
    c.n = int_field(j, "n");
    c.y = int_field(j, "y");
    const json& ver = require(j, "version");
    if (!ver.is_string()) throw malformed_certificate("version must be a string");
    c.version = ver.get<std::string>();
    if (j.contains("c_r")) c.c_r = int_field(j, "c_r");

    const json& bw = require(j, "bauer_witnesses");
    if (!bw.is_array()) throw malformed_certificate("bauer_witnesses must be an array");
    for (const auto& wj : bw) {
        if (!wj.is_object()) throw malformed_certificate("witness must be an object");
        check_keys(wj, {"ell", "p", "slot", "transcript"});
        BauerWitness w;
        w.ell = int_field(wj, "ell");
        w.p = int_field(wj, "p");
        Integer slot = int_field(wj, "slot");
        if (slot < 1 || slot > 3) throw malformed_certificate("slot out of range");
        w.slot = static_cast<int>(slot.get_si());
        const json& tr = require(wj, "transcript");
        if (!tr.is_array()) throw malformed_certificate("transcript must be an array");
        for (const auto& entry : tr) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                !entry[1].is_string())
                throw malformed_certificate("transcript entries must be [base, symbol] pairs");
            w.transcript.emplace_back(parse_decimal(entry[0].get<std::string>()),
                                      symbol_from_string(entry[1].get<std::string>()));
        }
        c.bauer_witnesses.push_back(std::move(w));
    }

    const json& idf = require(j, "ideal_factors");
    if (!idf.is_array()) throw malformed_certificate("ideal_factors must be an array");
    for (const auto& fj : idf) {
        if (!fj.is_object()) throw malformed_certificate("ideal factor must be an object");
        check_keys(fj, {"ell", "exponent", "root"});
        c.ideal_factors.push_back(
            {int_field(fj, "ell"), int_field(fj, "root"), int_field(fj, "exponent")});
    }

    if (j.contains("nonpower_evidence")) {
        const json& np = j["nonpower_evidence"];
        if (!np.is_array()) throw malformed_certificate("nonpower_evidence must be an array");
        for (const auto& ej : np) {
            if (!ej.is_object()) throw malformed_certificate("evidence must be an object");
            check_keys(ej, {"ell", "p", "root", "symbol", "value"});
            const json& sym = require(ej, "symbol");
            if (!sym.is_string() || symbol_from_string(sym.get<std::string>()) != Symbol::nonresidue)
                throw malformed_certificate("nonpower evidence symbol must be nonresidue");
            c.nonpower_evidence.push_back({int_field(ej, "p"), int_field(ej, "ell"),
                                           int_field(ej, "root"), int_field(ej, "value")});
        }
    }

    if (j.contains("pnr_evidence")) {
        const json& pe = j["pnr_evidence"];
        if (!pe.is_array()) throw malformed_certificate("pnr_evidence must be an array");
        for (const auto& ej : pe) {
            if (!ej.is_object()) throw malformed_certificate("pnr evidence must be an object");
            const json& kind = require(ej, "kind");
            if (!kind.is_string()) throw malformed_certificate("kind must be a string");
            std::string k = kind.get<std::string>();
            IrreducibilityEvidence ev;
            if (k == "mod_prime") {
                check_keys(ej, {"kind", "prime"});
                ev.kind = IrreducibilityEvidence::Kind::mod_prime;
                ev.prime = int_field(ej, "prime");
            } else if (k == "eisenstein_shift") {
                check_keys(ej, {"kind", "prime", "shift"});
                ev.kind = IrreducibilityEvidence::Kind::eisenstein_shift;
                ev.prime = int_field(ej, "prime");
                ev.shift = int_field(ej, "shift");
            } else if (k == "degree_sets") {
                check_keys(ej, {"kind", "primes"});
                ev.kind = IrreducibilityEvidence::Kind::degree_sets;
                const json& ps = require(ej, "primes");
                if (!ps.is_array()) throw malformed_certificate("primes must be an array");
                for (const auto& p : ps) {
                    if (!p.is_string()) throw malformed_certificate("primes entries must be strings");
                    ev.primes.push_back(parse_decimal(p.get<std::string>()));
                }
            } else {
                throw malformed_certificate("unknown evidence kind: " + k);
            }
            c.pnr_evidence.push_back({std::move(ev)});
        }
    }

    if (j.contains("ramified_q")) {
        const json& rq = j["ramified_q"];
        if (!rq.is_object()) throw malformed_certificate("ramified_q must be an object");
        check_keys(rq, {"n0", "q"});
        c.ramified = RamifiedData{int_field(rq, "q"), int_field(rq, "n0")};
    }

    std::sort(c.bauer_witnesses.begin(), c.bauer_witnesses.end(),
              [](const BauerWitness& a, const BauerWitness& b) {
                  return std::tie(a.p, a.slot) < std::tie(b.p, b.slot);
              });
    std::sort(c.ideal_factors.begin(), c.ideal_factors.end(),
              [](const IdealFactorCert& a, const IdealFactorCert& b) { return a.ell < b.ell; });
    std::sort(c.nonpower_evidence.begin(), c.nonpower_evidence.end(),
              [](const NonPowerEvidence& a, const NonPowerEvidence& b) { return a.p < b.p; });
    return c;
}

} // namespace classforge
