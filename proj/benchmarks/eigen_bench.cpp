#include <benchmark/benchmark.h>

#include "ringflow/eigensolve.hpp"
#include "ringflow/ring_kernel.hpp"

namespace {

ringflow::BackflowKernel kernel_of(std::int64_t n) {
  return ringflow::build_kernel(ringflow::RingConfig::with_dimension(
      ringflow::RingParameters::from_alpha_over_pi(0.3703965, 0.0), static_cast<std::size_t>(n)));
}

void BM_MinEigen(benchmark::State& state, ringflow::EigenMethod method) {
  const auto k = kernel_of(state.range(0));
  std::size_t iterations = 0;
  for (auto _ : state) {
    const auto r = ringflow::min_eigen(k, method);
    benchmark::DoNotOptimize(r.lambda_min);
    iterations = r.iterations;
  }
  state.counters["lanczos_steps"] = static_cast<double>(iterations);
}
BENCHMARK_CAPTURE(BM_MinEigen, dense, ringflow::EigenMethod::dense)
    ->Arg(400)->Arg(800)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinEigen, iterative, ringflow::EigenMethod::iterative)
    ->Arg(400)->Arg(800)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
