#include <benchmark/benchmark.h>

#include "qgaps/counting.hpp"
#include "qgaps/partition.hpp"
#include "qgaps/verify.hpp"

namespace {

void BM_memo_fill(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        qgaps::MemoTable table;
        table.ensure(n);
        benchmark::DoNotOptimize(table.high_water());
    }
}
BENCHMARK(BM_memo_fill)->Arg(500)->Arg(2000)->Arg(5000);

void BM_enumerate(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        long count = 0;
        qgaps::PartitionStream stream(n);
        while (stream.next())
            ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate)->Arg(20)->Arg(30)->Arg(40);

void BM_residue_dp(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(qgaps::mod4r_avoiding_table(n, 3));
}
BENCHMARK(BM_residue_dp)->Arg(100)->Arg(300);

void BM_crank_dp(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(qgaps::nonneg_crank_table(n));
}
BENCHMARK(BM_crank_dp)->Arg(100)->Arg(300);

void BM_rank_dp(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(qgaps::nonneg_rank_table(n));
}
BENCHMARK(BM_rank_dp)->Arg(100)->Arg(300);

void BM_verify_suite(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        bool all = true;
        for (const auto& d : qgaps::identity_registry())
            all = all && qgaps::verify_identity(d.id, n).pass;
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_verify_suite)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

} // namespace
