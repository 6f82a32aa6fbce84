#include <benchmark/benchmark.h>

#include "s2rank/oracle.hpp"
#include "s2rank/reconstruct.hpp"
#include "s2rank/s2rank.hpp"

namespace {

s2rank::PairFamily sample_family(int s, int d) {
    s2rank::GeneratorConfig cfg;
    cfg.seed = 31u + static_cast<std::uint64_t>(s) * 17u + static_cast<std::uint64_t>(d);
    cfg.s_min = cfg.s_max = s;
    cfg.d_min = cfg.d_max = d;
    return s2rank::conditional_matrix(s2rank::gen_random_joint(cfg));
}

void DetS2Polynomial(benchmark::State& state) {
    const auto fam = sample_family(4, 2);
    const auto in = s2rank::extract_minor(fam, s2rank::MinorSelector{{1, 2, 3, 4}, 1, 2});
    for (auto _ : state) {
        auto v = s2rank::det_s2(in);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(DetS2Polynomial);

void DetS2Companion(benchmark::State& state) {
    const auto fam = sample_family(4, 2);
    const auto in = s2rank::extract_minor(fam, s2rank::MinorSelector{{1, 2, 3, 4}, 1, 2});
    for (auto _ : state) {
        auto v = s2rank::det_s2_companion(in);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(DetS2Companion);

void RankAudit(benchmark::State& state) {
    const auto fam = sample_family(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        auto report = s2rank::s2_rank_is_one(fam);
        benchmark::DoNotOptimize(report);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RankAudit)->Arg(4)->Arg(6)->Arg(8)->Complexity();

void SolveWeights(benchmark::State& state) {
    const auto fam = sample_family(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto r = s2rank::solve_weights(fam);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SolveWeights)->Arg(4)->Arg(6)->Arg(8)->Complexity();

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
