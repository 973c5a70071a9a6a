// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <pcrank/montecarlo.hpp>

namespace {

pcrank::McConfig sweep_config(int n) {
    pcrank::McConfig cfg;
    cfg.n = n;
    cfg.base_count = 25;
    cfg.beta_end = 30.0;
    cfg.beta_step = 0.2;
    cfg.master_seed = 99;
    return cfg;
}

void bm_sweep(benchmark::State& state) {
    const pcrank::McConfig cfg = sweep_config(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(pcrank::run_experiment(cfg, threads));
}
BENCHMARK(bm_sweep)
    ->Args({3, 1})
    ->Args({3, 4})
    ->Args({4, 1})
    ->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
