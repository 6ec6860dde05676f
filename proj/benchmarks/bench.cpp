#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "bipyr/decomposition.hpp"
#include "bipyr/diagram.hpp"
#include "bipyr/enumeration.hpp"
#include "bipyr/realization.hpp"
#include "bipyr/volume.hpp"

namespace {

void BM_Lobachevsky(benchmark::State& state) {
    double theta = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bipyr::lobachevsky(theta));
        theta += 1e-6;
    }
}
BENCHMARK(BM_Lobachevsky);

void BM_Maxvol(benchmark::State& state) {
    int m = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bipyr::maxvol(m));
        if (++m > 1000) m = 3;
    }
}
BENCHMARK(BM_Maxvol);

void BM_CrossingSignature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;
    std::mt19937 rng(1);
    std::shuffle(levels.begin(), levels.end(), rng);
    const bipyr::Crossing c{0, levels};
    for (auto _ : state)
        benchmark::DoNotOptimize(bipyr::crossing_signature(c));
}
BENCHMARK(BM_CrossingSignature)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_FaceSizes(benchmark::State& state) {
    const bipyr::MulticrossingDiagram d =
        bipyr::builtin_example("fig8-ubercrossing");
    for (auto _ : state) benchmark::DoNotOptimize(bipyr::face_sizes(d));
}
BENCHMARK(BM_FaceSizes);

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bipyr::enumerate_crossings(n));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& state) {
    const std::vector<int> seq{4, 8, 12, 16, 12, 8, 8, 4};
    for (auto _ : state)
        benchmark::DoNotOptimize(bipyr::realize({seq}));
}
BENCHMARK(BM_Realize);

void BM_Table(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bipyr::table1({3, 4, 5, 10, 100}));
}
BENCHMARK(BM_Table);

}  // namespace

BENCHMARK_MAIN();
