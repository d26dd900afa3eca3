// Serial reference against OpenMP for each kernel, plus the two end-to-end
// workloads built on them. Set WELLSPEC_THREADS to cap the OpenMP side.

#include <benchmark/benchmark.h>

#include <vector>

#include "wellspec/cli.hpp"
#include "wellspec/kernels.hpp"
#include "wellspec/oracle.hpp"
#include "wellspec/spectrum.hpp"

using namespace wellspec;

namespace {

const DimensionlessConfig kConfig = DimensionlessConfig::generic(0.4142135623730951, 0.3);

void BM_evaluate_scan(benchmark::State& state, Execution exec) {
  const DispersionEvaluator eval(kConfig, 200.0 * kPi);
  std::vector<double> grid(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 200.0 * kPi * (i + 0.5) / grid.size();
  std::vector<double> out(grid.size());
  for (auto _ : state) {
    kernels::evaluate_scan(exec, eval, grid, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_fill_rank_one(benchmark::State& state, Execution exec) {
  const auto h = build_matrix(kConfig, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto dense = h.to_dense(exec);
    benchmark::DoNotOptimize(dense.data().data());
  }
}

void BM_secular(benchmark::State& state, Execution exec) {
  const auto h = build_matrix(kConfig, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto e = lowest_eigenvalues(h, h.size() / 2, exec);
    benchmark::DoNotOptimize(e.data());
  }
}

void BM_dense_eigen(benchmark::State& state, Execution exec) {
  const auto dense = build_matrix(kConfig, static_cast<std::size_t>(state.range(0))).to_dense();
  for (auto _ : state) {
    auto e = lowest_eigenvalues(dense, 8, exec);
    benchmark::DoNotOptimize(e.data());
  }
}

void BM_sweep(benchmark::State& state, Execution exec) {
  const std::vector<double> f_list{0.1, 0.4, 0.5};
  for (auto _ : state) {
    auto rows = cli::sweep_ground(f_list, cli::SignSelection::both, 199, false, exec);
    benchmark::DoNotOptimize(rows.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_evaluate_scan, serial, Execution::serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_evaluate_scan, omp, Execution::parallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_fill_rank_one, serial, Execution::serial)->Arg(1000)->Arg(4000);
BENCHMARK_CAPTURE(BM_fill_rank_one, omp, Execution::parallel)->Arg(1000)->Arg(4000);
BENCHMARK_CAPTURE(BM_secular, serial, Execution::serial)->Arg(2000)->Arg(8000);
BENCHMARK_CAPTURE(BM_secular, omp, Execution::parallel)->Arg(2000)->Arg(8000);
BENCHMARK_CAPTURE(BM_dense_eigen, serial, Execution::serial)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_dense_eigen, omp, Execution::parallel)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sweep, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sweep, omp, Execution::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
