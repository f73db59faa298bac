#include <benchmark/benchmark.h>

#include "fjump/expr_parser.hpp"
#include "fjump/jumping.hpp"

using namespace fjump;

namespace {

RingPtr cusp_ring() { return PolyRing::fp(Prime(5), {"x", "y"}); }

void BM_PolynomialPower(benchmark::State& state) {
    auto ring = cusp_ring();
    Polynomial f = parse_polynomial("x^2+y^3+x*y", ring);
    const std::uint64_t a = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(power(f, a));
    state.SetComplexityN(static_cast<int64_t>(a));
}
BENCHMARK(BM_PolynomialPower)->Arg(8)->Arg(24)->Arg(124)->Complexity();

void BM_ReducedGroebnerBasis(benchmark::State& state) {
    auto ring = cusp_ring();
    auto gens = parse_polynomial_list("x^3-2*x*y; x^2*y-2*y^2+x", ring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            buchberger_reduced_gb(ring, gens, MonomialOrder{MonomialOrderKind::grevlex}));
    }
}
BENCHMARK(BM_ReducedGroebnerBasis);

void BM_FrobeniusRootPower(benchmark::State& state) {
    auto ring = cusp_ring();
    Polynomial f = parse_polynomial("x^2+y^3", ring);
    const unsigned e = static_cast<unsigned>(state.range(0));
    const std::uint64_t a = prime_power_u64(Prime(5), e) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_root_power(f, a, e));
}
BENCHMARK(BM_FrobeniusRootPower)->Arg(1)->Arg(2)->Arg(3);

void BM_FptEstimate(benchmark::State& state) {
    auto ring = cusp_ring();
    Polynomial f = parse_polynomial("x^2+y^3", ring);
    const unsigned e_max = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fpt_estimate(f, e_max));
}
BENCHMARK(BM_FptEstimate)->Arg(2)->Arg(3);

void BM_JumpChain(benchmark::State& state) {
    auto ring = cusp_ring();
    Polynomial f = parse_polynomial("x^2+y^3", ring);
    for (auto _ : state) benchmark::DoNotOptimize(ideal_chain(f, 2));
}
BENCHMARK(BM_JumpChain);

} // namespace

BENCHMARK_MAIN();
