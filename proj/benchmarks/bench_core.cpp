#include <benchmark/benchmark.h>

#include "uff/bounds.hpp"
#include "uff/constructors.hpp"
#include "uff/family.hpp"

namespace {

void BM_ChainFamily(benchmark::State& state) {
    const uff::ChainSpec spec = uff::canonical_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uff::chain_family(spec));
    }
}
BENCHMARK(BM_ChainFamily)->Arg(12)->Arg(16)->Arg(20);

void BM_UnionFreeCheck(benchmark::State& state) {
    const uff::Family f = uff::chain_family(uff::canonical_chain(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uff::is_union_free(f));
    }
}
BENCHMARK(BM_UnionFreeCheck)->Arg(10)->Arg(12)->Arg(14);

void BM_UnionClosure(benchmark::State& state) {
    const uff::Family f = uff::chain_family(uff::canonical_chain(static_cast<int>(state.range(0))));
    const std::size_t cap = std::size_t{1} << state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uff::union_closure(f, cap));
    }
}
BENCHMARK(BM_UnionClosure)->Arg(10)->Arg(14);

void BM_BestChain(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(uff::best_chain(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_BestChain)->Arg(30)->Arg(64);

void BM_BoundsTable(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            uff::bounds_table(static_cast<int>(state.range(0)), uff::TableMode::best_known));
    }
}
BENCHMARK(BM_BoundsTable)->Arg(30)->Arg(64);

void BM_MaximalCheck(benchmark::State& state) {
    const uff::Family f = uff::chain_family(uff::canonical_chain(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uff::is_maximal_union_free(f));
    }
}
BENCHMARK(BM_MaximalCheck)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
