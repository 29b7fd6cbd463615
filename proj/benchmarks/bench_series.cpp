#include <benchmark/benchmark.h>

#include "qgaps/series.hpp"

namespace {

void BM_fps_mul(benchmark::State& state) {
    const long n = state.range(0);
    auto a = qgaps::euler_product(1, 1, n).inverse();
    auto b = qgaps::euler_product(2, 2, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_fps_mul)->Arg(128)->Arg(256)->Arg(512);

void BM_fps_inverse(benchmark::State& state) {
    const long n = state.range(0);
    auto a = qgaps::euler_product(1, 1, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_fps_inverse)->Arg(128)->Arg(256)->Arg(512);

void BM_euler_product(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(qgaps::euler_product(1, 1, n));
}
BENCHMARK(BM_euler_product)->Arg(512)->Arg(2048);

void BM_gap_sum_series(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(qgaps::gap_sum_series(2, n));
}
BENCHMARK(BM_gap_sum_series)->Arg(128)->Arg(300)->Arg(512);

} // namespace

BENCHMARK_MAIN();
