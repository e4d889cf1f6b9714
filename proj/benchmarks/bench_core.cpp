#include <benchmark/benchmark.h>

#include "mnseq/hamiltonian.hpp"
#include "mnseq/label.hpp"
#include "mnseq/seq.hpp"
#include "mnseq/smooth.hpp"
#include "mnseq/word.hpp"

using namespace mnseq;

namespace {

// interleaved word 12..n12..n, always realizable
Word interleaved(int n) {
    std::vector<int> symbols;
    for (int pass = 0; pass < 2; ++pass) {
        for (int s = 1; s <= n; ++s) symbols.push_back(s);
    }
    return Word::from_symbols(symbols);
}

void BM_BuildGraph(benchmark::State& state) {
    Word w = interleaved(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        AssemblyGraph g(w);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_BuildGraph)->Arg(2)->Arg(4)->Arg(6);

void BM_EnumerateHpps(benchmark::State& state) {
    AssemblyGraph g(interleaved(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto hpps = enumerate_hpps(g);
        benchmark::DoNotOptimize(hpps.size());
    }
}
BENCHMARK(BM_EnumerateHpps)->Arg(2)->Arg(4)->Arg(6);

void BM_DistinctCount(benchmark::State& state) {
    AssemblyGraph g(interleaved(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distinct_count(g));
    }
}
BENCHMARK(BM_DistinctCount)->Arg(2)->Arg(4);

void BM_SmoothAll(benchmark::State& state) {
    AssemblyGraph g(interleaved(static_cast<int>(state.range(0))));
    auto hpps = enumerate_hpps(g);
    for (auto _ : state) {
        for (const Hpp& h : hpps) {
            for (int v = 1; v <= g.vertex_count(); ++v) {
                benchmark::DoNotOptimize(smoothed_sequence(g, h, v));
            }
        }
    }
}
BENCHMARK(BM_SmoothAll)->Arg(2)->Arg(4);

void BM_CanonicalCensus(benchmark::State& state) {
    for (auto _ : state) {
        auto words = enumerate_canonical_words(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(words.size());
    }
}
BENCHMARK(BM_CanonicalCensus)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
