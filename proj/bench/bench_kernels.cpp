// Serial reference vs OpenMP sweeps over the trial-energy grid.
//
//   ./build/bench/bench_kernels
//   OMP_NUM_THREADS=4 ./build/bench/bench_kernels --benchmark_filter=Wronskian
#include <benchmark/benchmark.h>

#include "gswsp/analytic.hpp"
#include "gswsp/kernels.hpp"
#include "gswsp/oracle.hpp"

namespace {

using namespace gswsp;

std::vector<double> grid_for(const PotentialParams& p, double step) {
    return energy_grid(allowed_interval(p), step);
}

void BM_ResidualsSerial(benchmark::State& state) {
    const auto p = PotentialParams::repulsive();
    const auto grid = grid_for(p, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::residuals_serial(p, Parity::even, grid));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_ResidualsOmp(benchmark::State& state) {
    const auto p = PotentialParams::repulsive();
    const auto grid = grid_for(p, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::residuals_omp(p, Parity::even, grid));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_WronskiansSerial(benchmark::State& state) {
    const auto p = PotentialParams::repulsive();
    const Shooter shooter(p, OracleGrid::for_params(p));
    const auto grid = grid_for(p, 5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::wronskians_serial(shooter, grid));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_WronskiansOmp(benchmark::State& state) {
    const auto p = PotentialParams::repulsive();
    const Shooter shooter(p, OracleGrid::for_params(p));
    const auto grid = grid_for(p, 5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::wronskians_omp(shooter, grid));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_BuildSpectrum(benchmark::State& state) {
    const auto p = PotentialParams::repulsive();
    SpectrumOptions opts;
    opts.scan.exec = state.range(0) ? Exec::parallel : Exec::serial;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_spectrum(p, opts));
    }
}

}  // namespace

BENCHMARK(BM_ResidualsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResidualsOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WronskiansSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WronskiansOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSpectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
