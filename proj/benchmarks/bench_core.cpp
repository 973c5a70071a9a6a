// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <pcrank/bounds.hpp>
#include <pcrank/inconsistency.hpp>
#include <pcrank/matrix.hpp>
#include <pcrank/prioritize.hpp>
#include <pcrank/rankstats.hpp>

namespace {

pcrank::PCMatrix test_matrix(int n) {
    return disturb(pcrank::PCMatrix::random_consistent(n, 7), 6.0, 11);
}

void bm_evm(benchmark::State& state) {
    const pcrank::PCMatrix m = test_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pcrank::evm(m));
}
BENCHMARK(bm_evm)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

void bm_gmm(benchmark::State& state) {
    const pcrank::PCMatrix m = test_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pcrank::gmm(m));
}
BENCHMARK(bm_gmm)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

void bm_triad_index(benchmark::State& state) {
    const pcrank::PCMatrix m = test_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pcrank::koczkodaj_ki(m));
}
BENCHMARK(bm_triad_index)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

void bm_full_certificate(benchmark::State& state) {
    const pcrank::PCMatrix m = test_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pcrank::full_certificate(m));
}
BENCHMARK(bm_full_certificate)->Arg(3)->Arg(5)->Arg(9);

void bm_disturb(benchmark::State& state) {
    const pcrank::PCMatrix m = pcrank::PCMatrix::random_consistent(
        static_cast<int>(state.range(0)), 3);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(disturb(m, 8.0, ++seed));
}
BENCHMARK(bm_disturb)->Arg(3)->Arg(9);

} // namespace
