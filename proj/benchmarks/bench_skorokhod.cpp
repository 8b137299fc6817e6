#include <benchmark/benchmark.h>

#include "skorokhod/skorokhod.hpp"

using namespace skorokhod;

namespace {

CadlagFunction walk(int jumps, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> breaks{0.0}, values{0.0};
    for (int i = 1; i <= jumps; ++i) {
        breaks.push_back(static_cast<double>(i) / (jumps + 1));
        values.push_back(values.back() + rng.sign() / std::sqrt(static_cast<double>(jumps)));
    }
    return CadlagFunction::scalar_step(breaks, values);
}

void BM_OscillationProfile(benchmark::State& state) {
    const auto f = walk(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(oscillation_profile(0.1, f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OscillationProfile)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DistanceJ1(benchmark::State& state) {
    const auto f = walk(static_cast<int>(state.range(0)), 1), g = walk(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(d_j1(f, g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceJ1)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_HausdorffM2(benchmark::State& state) {
    const auto f = walk(static_cast<int>(state.range(0)), 1), g = walk(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(d_m2(f, g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HausdorffM2)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DistanceM1Upper(benchmark::State& state) {
    const auto f = walk(static_cast<int>(state.range(0)), 1), g = walk(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(d_m1_upper(f, g, 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceM1Upper)->RangeMultiplier(4)->Range(16, 256)->Complexity();

void BM_SimulateSrw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto k = make_kernel("srw", n);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_chain(k, {0.0}, n, ++seed));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SimulateSrw)->Arg(256)->Arg(4096);

}  // namespace
BENCHMARK_MAIN();
