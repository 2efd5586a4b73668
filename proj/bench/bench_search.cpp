// Serial reference against the OpenMP kernel on the same search workloads.

#include <benchmark/benchmark.h>

#include "homcsa/search.hpp"

using namespace homcsa;

namespace {

SearchConfig workload(std::size_t n, SearchTarget target, SearchMode mode) {
  SearchConfig cfg;
  cfg.dim = n;
  cfg.coefficients = {Scalar(-1), Scalar(0), Scalar(1)};
  cfg.target = target;
  cfg.mode = mode;
  cfg.samples = 20000;
  cfg.seed = 1;
  return cfg;
}

void run(benchmark::State& state, SearchConfig cfg, Execution exec) {
  std::size_t hits = 0;
  for (auto _ : state) {
    auto out = run_search(cfg, exec);
    hits = out.size();
    benchmark::DoNotOptimize(out);
  }
  state.counters["hits"] = double(hits);
}

}  // namespace

BENCHMARK_CAPTURE(run, hom_csa_dim2_serial, workload(2, SearchTarget::HomCsa, SearchMode::Exhaustive),
                  Execution::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, hom_csa_dim2_parallel, workload(2, SearchTarget::HomCsa, SearchMode::Exhaustive),
                  Execution::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, hom_lie_random_dim3_serial, workload(3, SearchTarget::HomLie, SearchMode::Random),
                  Execution::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, hom_lie_random_dim3_parallel, workload(3, SearchTarget::HomLie, SearchMode::Random),
                  Execution::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, bialgebra_dim1_serial, workload(1, SearchTarget::Bialgebra, SearchMode::Exhaustive),
                  Execution::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, bialgebra_dim1_parallel, workload(1, SearchTarget::Bialgebra, SearchMode::Exhaustive),
                  Execution::Parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
