#include <benchmark/benchmark.h>

#include "ringflow/ring_kernel.hpp"
#include "ringflow/line_limit.hpp"

namespace {

void BM_BuildKernel(benchmark::State& state) {
  const auto config = ringflow::RingConfig::with_dimension(
      ringflow::RingParameters::from_alpha_over_pi(0.3703965, 0.0), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto k = ringflow::build_kernel(config);
    benchmark::DoNotOptimize(k.matrix().data().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildKernel)->Arg(400)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

void BM_LineKernel(benchmark::State& state) {
  const ringflow::LineGrid grid(10.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto a = ringflow::line_kernel(grid);
    benchmark::DoNotOptimize(a.data().data());
  }
}
BENCHMARK(BM_LineKernel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
