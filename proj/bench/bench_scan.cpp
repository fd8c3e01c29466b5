// Serial reference vs OpenMP grid evaluation of f, and the full sign scan.

#include <benchmark/benchmark.h>

#include <vector>

#include "seiffert/scan.hpp"
#include "seiffert/verifier.hpp"

namespace {

using seiffert::Execution;

std::vector<double> grid_of(benchmark::State& state) {
    seiffert::ScanConfig cfg;
    cfg.grid_size = static_cast<std::size_t>(state.range(0));
    return seiffert::scan_grid(cfg);
}

void BM_EvaluateSerial(benchmark::State& state) {
    const auto xs = grid_of(state);
    const seiffert::KernelParams params(0.3, 1.0);
    std::vector<double> out(xs.size());
    for (auto _ : state) {
        seiffert::evaluate_f_serial(params, xs, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
    const auto xs = grid_of(state);
    const seiffert::KernelParams params(0.3, 1.0);
    std::vector<double> out(xs.size());
    for (auto _ : state) {
        seiffert::evaluate_f_parallel(params, xs, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
}

void BM_ScanSign(benchmark::State& state) {
    seiffert::ScanConfig cfg;
    cfg.grid_size = static_cast<std::size_t>(state.range(0));
    const auto exec = state.range(1) ? Execution::parallel : Execution::serial;
    const seiffert::KernelParams params(0.3, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(seiffert::scan_sign(params, cfg, exec));
    }
}

void BM_EmpiricalThresholds(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(seiffert::empirical_t_lower(1.0));
        benchmark::DoNotOptimize(seiffert::empirical_t_upper(1.0));
    }
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_EvaluateParallel)->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_ScanSign)->ArgsProduct({{1 << 12, 1 << 16}, {0, 1}});
BENCHMARK(BM_EmpiricalThresholds)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
