#include <benchmark/benchmark.h>

#include "morse/frontier.hpp"
#include "morse/generators.hpp"
#include "morse/heuristics.hpp"
#include "morse/oracle.hpp"

namespace {

morse::SimplicialComplex corpus_complex(std::int64_t size) {
    morse::RandomComplexParams p;
    p.dimension = 3;
    p.vertices = 12;
    p.facets = static_cast<std::size_t>(size);
    p.max_simplices = 2000;
    p.connected = true;
    return morse::random_complex(7, p);
}

void BM_MaxMatching(benchmark::State& state) {
    const auto k = corpus_complex(state.range(0));
    const auto h = morse::hasse(k);
    for (auto _ : state) benchmark::DoNotOptimize(morse::max_cardinality_matching(h));
    state.counters["simplices"] = static_cast<double>(k.size());
}
BENCHMARK(BM_MaxMatching)->Arg(8)->Arg(32)->Arg(128);

void BM_Frontier(benchmark::State& state) {
    const auto k = corpus_complex(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(morse::frontier_edges_matching(k));
    state.counters["simplices"] = static_cast<double>(k.size());
}
BENCHMARK(BM_Frontier)->Arg(8)->Arg(32)->Arg(128);

void BM_Coreduction(benchmark::State& state) {
    const auto k = corpus_complex(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(morse::coreduction_matching(k));
}
BENCHMARK(BM_Coreduction)->Arg(8)->Arg(32)->Arg(128);

void BM_Reduction(benchmark::State& state) {
    const auto k = corpus_complex(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(morse::reduction_matching(k));
}
BENCHMARK(BM_Reduction)->Arg(8)->Arg(32)->Arg(128);

void BM_AcyclicityCheck(benchmark::State& state) {
    const auto k = corpus_complex(state.range(0));
    const auto m = morse::frontier_edges_matching(k).morse.matching();
    for (auto _ : state) benchmark::DoNotOptimize(morse::is_acyclic(k, m));
}
BENCHMARK(BM_AcyclicityCheck)->Arg(32)->Arg(128);

void BM_Betti(benchmark::State& state) {
    const auto k = corpus_complex(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(morse::betti_gf2(k));
}
BENCHMARK(BM_Betti)->Arg(32)->Arg(128);

void BM_OracleDunceHat(benchmark::State& state) {
    const auto k = morse::dunce_hat();
    morse::OracleOptions opts;
    opts.budget = morse::kDefaultOracleBudget;
    for (auto _ : state) benchmark::DoNotOptimize(morse::optimal_morse_matching(k, opts));
}
BENCHMARK(BM_OracleDunceHat);

}  // namespace

BENCHMARK_MAIN();
