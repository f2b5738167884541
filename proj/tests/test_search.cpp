#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "classforge/modular.hpp"
#include "classforge/search.hpp"

using namespace classforge;

TEST_CASE("find_bauer_prime pinned examples") {
    // p=5, 37 a nonresidue, avoiding the cubic's fixed primes -> 11
    BauerWitness w1 = find_bauer_prime(5, {{37, Symbol::nonresidue}}, {2, 3, 37, 47}, 0, 1000000);
    CHECK(w1.ell == 11);
    CHECK(w1.transcript.size() == 1);

    // p=5, 2 residue, 3 nonresidue -> 151
    BauerWitness w2 = find_bauer_prime(5, {{2, Symbol::residue}, {3, Symbol::nonresidue}}, {}, 0,
                                       1000000);
    CHECK(w2.ell == 151);

    // p=5, 3 residue, 2 nonresidue -> 41
    BauerWitness w3 = find_bauer_prime(5, {{3, Symbol::residue}, {2, Symbol::nonresidue}}, {}, 0,
                                       1000000);
    CHECK(w3.ell == 41);

    // floor pushes past the first hit
    BauerWitness w4 = find_bauer_prime(5, {{3, Symbol::residue}, {2, Symbol::nonresidue}}, {}, 41,
                                       1000000);
    CHECK(w4.ell > 41);

    CHECK_THROWS_AS(
        find_bauer_prime(5, {{2, Symbol::residue}, {3, Symbol::nonresidue}}, {}, 0, 100),
        bound_exhausted);
}

TEST_CASE("build_cr reproduces the worked quartic example") {
    SearchConfig cfg;
    CrResult res = build_cr(FamilyId::quartic, 5, 13, cfg);
    REQUIRE(res.witnesses.size() == 2);
    CHECK(res.witnesses[0].ell == 151);
    CHECK(res.witnesses[1].ell == 41);
    CHECK(res.s == 11);
    CHECK(res.c_r == 68101);
    CHECK(floor_mod(res.c_r, 6) == 1);
    CHECK(gcd(res.c_r, Integer(5 * 13)) == 1);
}

TEST_CASE("build_cr sextic congruence steering") {
    SearchConfig cfg;
    CrResult r5 = build_cr(FamilyId::sextic, 5, 1, cfg);
    CHECK(mod_pow(r5.c_r, 5, 30).value == 1); // 7^(1-5) = 7^-4 = 1 (mod 30)
    CHECK(gcd(r5.c_r, Integer(210)) == 1);
    REQUIRE(r5.witnesses.size() == 2);
    CHECK(r5.witnesses[0].ell == 431);
    CHECK(r5.witnesses[1].ell == 761);
    CHECK(r5.c_r == 327991); // s = 1

    CrResult r7 = build_cr(FamilyId::sextic, 7, 1, cfg);
    CHECK(mod_pow(r7.c_r, 7, 30).value == mod_pow(7, floor_mod(Integer(1 - 7), Integer(4)), 30).value);

    // r=1 degenerates to c_r = 1 (mod 30)
    CrResult r1 = build_cr(FamilyId::sextic, 1, 1, cfg);
    CHECK(r1.witnesses.empty());
    CHECK(floor_mod(r1.c_r, 30) == 1);

    CHECK_THROWS_AS(build_cr(FamilyId::cubic, 5, 1, cfg), non_galois_family);
    CHECK_THROWS_AS(build_cr(FamilyId::sextic, 3, 1, cfg), gcd_constraint_violated);
}

TEST_CASE("construct_y_n invariants") {
    SearchConfig cfg;
    CrResult cr = build_cr(FamilyId::sextic, 5, 1, cfg);
    YN yn = construct_y_n(FamilyId::sextic, 5, cr.c_r, 0, 1, 0);
    CHECK(pow_i(yn.y, 5) == 30 * yn.n - 143);
    CHECK(floor_mod(yn.n, 4) == 2);
    CHECK(gcd(yn.y, Integer(7)) == 1);
    CHECK(floor_mod(pow_i(yn.y, 5), Integer(30)) == 7); // y^r = 7 (mod 30)

    // quartic worked example: m=0, y0=0, c_r=68101 -> y = -68101
    YN q = construct_y_n(FamilyId::quartic, 5, 68101, 0, 13, 0);
    CHECK(q.y == -68101);
    CHECK(pow_i(q.y, 5) == 6 * q.n - 7);
    CHECK(gcd(q.y, Integer(5)) == 1);

    // cubic: square when y^r = 3 (mod 4)
    Integer prod = Integer(1811) * 31 * 11; // product of a valid witness triple
    YN c = construct_y_n(FamilyId::cubic, 5, prod, 0, 1, 0);
    CHECK(pow_i(c.y, 5) == 6 * c.n + 7);
    CHECK(mpz_odd_p(c.n.get_mpz_t()));
    CHECK(c.n >= 5);
    CHECK(mod_pow(c.y, 5, 4).value == 1);
    CHECK(c.y == prod * prod); // 617551 = 3 (mod 4) forces the squaring
}

TEST_CASE("determinism: same inputs, same outputs") {
    SearchConfig cfg;
    CrResult a = build_cr(FamilyId::quartic, 5, 13, cfg);
    CrResult b = build_cr(FamilyId::quartic, 5, 13, cfg);
    CHECK(a.c_r == b.c_r);
    YN y1 = construct_y_n(FamilyId::sextic, 5, 327991, 2, 1, 1);
    YN y2 = construct_y_n(FamilyId::sextic, 5, 327991, 2, 1, 1);
    CHECK(y1.y == y2.y);
    CHECK(y1.n == y2.n);
    // the excluded-prime guard is a typed, per-m error
    CHECK_THROWS_AS(construct_y_n(FamilyId::sextic, 5, 327991, 2, 1, 3), congruence_violated);
}

TEST_CASE("ramified_prime_setup at the worked q = 13, r = 1") {
    RamifiedSetup s = ramified_prime_setup(FamilyId::sextic, 1, 13, 1);
    CHECK(s.n0 == 3); // -108 = 9 (mod 13), sqrt normalized small
    CHECK(floor_mod(s.n0 * s.n0 + 108, Integer(13)) == 0);
    CHECK(floor_mod(s.n0 * s.n0 + 108, Integer(169)) != 0);
    CHECK(s.b0 == 116); // lift of 12 with b0 = 30*3 - 143 (mod 169)
    CHECK(mod_pow(s.b0, 1, 169).value == floor_mod(Integer(30 * 3 - 143), Integer(169)));
    CHECK(s.y0 == 3);
    CHECK(floor_mod(Integer(1) * (30 * s.y0 - 143) - s.b0, Integer(169)) == 0);

    CHECK_THROWS_AS(ramified_prime_setup(FamilyId::sextic, 1, 7, 1), prime_inadmissible);
    CHECK_THROWS_AS(ramified_prime_setup(FamilyId::sextic, 5, 13, 327991), prime_inadmissible);
    CHECK_THROWS_AS(ramified_prime_setup(FamilyId::cubic, 2, 13, 1), non_galois_family);
}

TEST_CASE("find_splitting_prime") {
    CHECK(find_splitting_prime(FamilyId::sextic, 1, 100) == 13);
    CHECK(find_splitting_prime(FamilyId::sextic, 5, 2000) == 1621);
    CHECK_THROWS_AS(find_splitting_prime(FamilyId::sextic, 5, 100), bound_exhausted);
}

TEST_CASE("run_search round-trips through the verifier") {
    SearchConfig cfg;
    for (auto fam : {FamilyId::sextic, FamilyId::quartic, FamilyId::cubic}) {
        ClassOrderCertificate cert = run_search(fam, 5, cfg);
        CHECK(verify_certificate(cert).valid);
        CHECK(cert.r == 5);
        // serialization round-trip
        ClassOrderCertificate back = parse_certificate(serialize(cert));
        CHECK(back == cert);
        CHECK(verify_certificate(back).valid);
    }
}

TEST_CASE("run_search r = 1 vacuous witnesses") {
    SearchConfig cfg;
    ClassOrderCertificate cert = run_search(FamilyId::quartic, 1, cfg);
    CHECK(cert.bauer_witnesses.empty());
    CHECK(cert.nonpower_evidence.empty());
    CHECK(verify_certificate(cert).valid);
}

TEST_CASE("run_search rejects bad r per family") {
    SearchConfig cfg;
    CHECK_THROWS_AS(run_search(FamilyId::sextic, 3, cfg), gcd_constraint_violated);
    CHECK_THROWS_AS(run_search(FamilyId::quartic, 4, cfg), gcd_constraint_violated);
    CHECK_THROWS_AS(run_search(FamilyId::cubic, 6, cfg), gcd_constraint_violated);
    CHECK_THROWS_AS(run_search(FamilyId::cubic, 5, cfg, Integer(13)), non_galois_family);
}

TEST_CASE("ramified run: sextic r = 1, q = 13") {
    SearchConfig cfg;
    ClassOrderCertificate cert = run_search(FamilyId::sextic, 1, cfg, Integer(13));
    REQUIRE(cert.ramified.has_value());
    CHECK(cert.ramified->q == 13);
    CHECK(floor_mod(cert.n * cert.n + 108, Integer(13)) == 0);
    CHECK(floor_mod(cert.n * cert.n + 108, Integer(169)) != 0);
    CHECK(verify_certificate(cert).valid);
}

TEST_CASE("config parsing") {
    std::string path = "/tmp/classforge_test_config.txt";
    {
        std::ofstream out(path);
        out << "# comment\nscan_bound = 50000\nm_max=7\nfactor_budget = 123456\n"
            << "precision_budget=3\n";
    }
    SearchConfig cfg = parse_config_file(path);
    CHECK(cfg.scan_bound == 50000);
    CHECK(cfg.m_max == 7);
    CHECK(cfg.factor_budget == 123456);
    CHECK(cfg.precision_budget == 3);
    SearchConfig bad;
    CHECK_THROWS_AS(apply_config_entry(bad, "nope", "1"), error);
}

TEST_CASE("parallel m-scan matches the sequential result") {
    SearchConfig seq;
    SearchConfig par;
    par.jobs = 3;
    ClassOrderCertificate a = run_search(FamilyId::quartic, 5, seq);
    ClassOrderCertificate b = run_search(FamilyId::quartic, 5, par);
    CHECK(a == b);
}
