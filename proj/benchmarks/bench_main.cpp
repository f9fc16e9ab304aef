#include <benchmark/benchmark.h>

#include <complex>

#include "sheetcurrent/chaos.hpp"
#include "sheetcurrent/current.hpp"
#include "sheetcurrent/norms.hpp"
#include "sheetcurrent/sheet.hpp"

using namespace sheetcurrent;

namespace {

void bm_simulate_sheet(benchmark::State& state) {
    const GridSpec grid = GridSpec::uniform(state.range(0), state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_sheet(grid, 1, seed++));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(bm_simulate_sheet)->Arg(16)->Arg(64)->Arg(256);

void bm_fourier_current(benchmark::State& state) {
    const GridSpec grid = GridSpec::uniform(state.range(0), state.range(0));
    const SheetPath path = simulate_sheet(grid, 1, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier_current(path, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * (state.range(0) - 1) * (state.range(0) - 1));
}
BENCHMARK(bm_fourier_current)->Arg(16)->Arg(64)->Arg(256);

void bm_multi_current_all(benchmark::State& state) {
    const GridSpec grid = GridSpec::uniform(50, 50);
    const SheetPath path = simulate_sheet(grid, 3, 7);
    const double x[] = {0.5, -0.3, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(multi_fourier_current_all(path, x));
    }
}
BENCHMARK(bm_multi_current_all);

void bm_truncated_delta(benchmark::State& state) {
    const unsigned cap = state.range(0);
    double w = -1.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncated_delta(0.5, 0.7, 0.9, w, cap));
        w = -w;
    }
}
BENCHMARK(bm_truncated_delta)->Arg(12)->Arg(64)->Arg(256);

void bm_watanabe_norm(benchmark::State& state) {
    SeriesParams params;
    params.m_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(watanabe_norm_xi(0.5, params));
    }
}
BENCHMARK(bm_watanabe_norm)->Arg(64)->Arg(200)->Arg(1000);

void bm_approx_error_norm(benchmark::State& state) {
    SeriesParams params;
    params.m_max = 64;
    const GridSpec grid = GridSpec::uniform(state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(approximation_error_norm(0.5, grid, params));
    }
}
BENCHMARK(bm_approx_error_norm)->Arg(8)->Arg(32);

void bm_approx_error_fourier(benchmark::State& state) {
    const GridSpec grid = GridSpec::uniform(state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(approx_error_fourier_exact(grid, 1.0));
    }
}
BENCHMARK(bm_approx_error_fourier)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
