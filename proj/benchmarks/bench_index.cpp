#include <benchmark/benchmark.h>

#include <random>

#include "cfs/cfs_index.hpp"
#include "cfs/random_nfa.hpp"

namespace {

cfs::Nfa instance(std::size_t n) {
    return cfs::random_forward_stable_nfa(n, 2 * n, 4, 42);
}

void BM_build(benchmark::State& state) {
    cfs::Nfa nfa = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto idx = cfs::build_index(nfa);
        benchmark::DoNotOptimize(idx);
    }
    state.counters["n"] = static_cast<double>(nfa.n);
}
BENCHMARK(BM_build)->Arg(20)->Arg(50)->Arg(100);

void BM_query(benchmark::State& state) {
    cfs::Nfa nfa = instance(static_cast<std::size_t>(state.range(0)));
    cfs::CfsIndex idx = cfs::build_index(nfa);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<cfs::State> pick(0, static_cast<cfs::State>(nfa.n - 1));
    for (auto _ : state) {
        auto t = cfs::query(idx, pick(rng), pick(rng));
        benchmark::DoNotOptimize(t);
    }
    state.counters["n"] = static_cast<double>(nfa.n);
}
BENCHMARK(BM_query)->Arg(20)->Arg(50)->Arg(100)->Arg(200);

void BM_serialize(benchmark::State& state) {
    cfs::CfsIndex idx = cfs::build_index(instance(100));
    for (auto _ : state) {
        auto bytes = cfs::serialize(idx);
        benchmark::DoNotOptimize(bytes);
    }
}
BENCHMARK(BM_serialize);

}  // namespace

BENCHMARK_MAIN();
