#include <benchmark/benchmark.h>

#include "classforge/embeddings.hpp"
#include "classforge/mod_factor.hpp"
#include "classforge/modular.hpp"
#include "classforge/primality.hpp"
#include "classforge/resultant.hpp"
#include "classforge/search.hpp"

using namespace classforge;

namespace {

void BM_mod_pow(benchmark::State& state) {
    Integer base("123456789123456789"), exp("987654321987654321"), mod = next_prime(pow_i(10, 18));
    for (auto _ : state) benchmark::DoNotOptimize(mod_pow(base, exp, mod).value.get_ui());
}
BENCHMARK(BM_mod_pow);

void BM_power_residue_symbol(benchmark::State& state) {
    Integer ell = next_prime(Integer(1000000) * 5 + 1);
    while (floor_mod(ell, 5) != 1) ell = next_prime(ell);
    for (auto _ : state) benchmark::DoNotOptimize(power_residue_symbol(2, ell, 5));
}
BENCHMARK(BM_power_residue_symbol);

void BM_factorize_semiprime(benchmark::State& state) {
    Integer p = next_prime(Integer(1) << state.range(0));
    Integer q = next_prime(p + 1000);
    Integer n = p * q;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n).factors.size());
}
BENCHMARK(BM_factorize_semiprime)->Arg(24)->Arg(32)->Arg(40);

void BM_resultant_sextic_disc(benchmark::State& state) {
    RatPoly f = defining_poly(FamilyId::sextic, 1234567890);
    for (auto _ : state) benchmark::DoNotOptimize(discriminant(f) == Rational(0));
}
BENCHMARK(BM_resultant_sextic_disc);

void BM_factor_mod_q(benchmark::State& state) {
    IntPoly P = script_P(FamilyId::sextic, 5);
    Integer q = 1621;
    for (auto _ : state) benchmark::DoNotOptimize(factor_mod_q(P, q).factors.size());
}
BENCHMARK(BM_factor_mod_q);

void BM_splits_linearly(benchmark::State& state) {
    IntPoly P = script_P(FamilyId::sextic, 5);
    Integer q = 1621;
    for (auto _ : state) benchmark::DoNotOptimize(splits_linearly_mod(P, q));
}
BENCHMARK(BM_splits_linearly);

void BM_pell(benchmark::State& state) {
    Integer D = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pell_fundamental_unit(D).x.get_ui());
}
BENCHMARK(BM_pell)->Arg(124)->Arg(1000000009 + 15); // n^2+16 regimes, small and large

void BM_sextic_scan_entry(benchmark::State& state) {
    for (auto _ : state) {
        auto entries = sextic_independence_scan(50, 50);
        benchmark::DoNotOptimize(entries[0].certified);
    }
}
BENCHMARK(BM_sextic_scan_entry);

void BM_run_search_quartic_r5(benchmark::State& state) {
    SearchConfig cfg;
    for (auto _ : state) {
        ClassOrderCertificate cert = run_search(FamilyId::quartic, 5, cfg);
        benchmark::DoNotOptimize(cert.n.get_ui());
    }
}
BENCHMARK(BM_run_search_quartic_r5);

void BM_verify_quartic_r5(benchmark::State& state) {
    ClassOrderCertificate cert = run_search(FamilyId::quartic, 5, SearchConfig{});
    std::string bytes = serialize(cert);
    for (auto _ : state) {
        Verdict v = verify_certificate(parse_certificate(bytes));
        benchmark::DoNotOptimize(v.valid);
    }
}
BENCHMARK(BM_verify_quartic_r5);

} // namespace

BENCHMARK_MAIN();
