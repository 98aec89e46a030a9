#include <benchmark/benchmark.h>

#include "chordarc/curve.hpp"
#include "chordarc/flow.hpp"
#include "chordarc/generators.hpp"
#include "chordarc/pair_functionals.hpp"

using namespace chordarc;

namespace {

DiscreteCurve star(std::size_t n) {
  GeneratorSpec s;
  s.name = "star";
  s.n = n;
  return generate(s).curve;
}

void BM_MinChordArc(benchmark::State& state) {
  const auto c = star(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_chord_arc(c).ratio_min);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinChordArc)->RangeMultiplier(2)->Range(256, 2048)->Complexity(benchmark::oNSquared);

void BM_ThetaScan(benchmark::State& state) {
  const auto c = star(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta_scan(c).theta_min);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThetaScan)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oN);

void BM_IsEmbedded(benchmark::State& state) {
  const auto c = star(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_embedded(c).embedded);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsEmbedded)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oN);

void BM_Step(benchmark::State& state) {
  const auto spec = ForcingSpec::parse("area");
  StepperConfig cfg;
  cfg.mesh_size = static_cast<std::size_t>(state.range(0));
  cfg.max_time = 1e9;
  auto s = FlowState::initial(star(cfg.mesh_size), spec);
  for (auto _ : state) s = step(s, spec, cfg);
}
BENCHMARK(BM_Step)->RangeMultiplier(2)->Range(256, 2048);

void BM_SplineResample(benchmark::State& state) {
  const auto c = star(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(resample_uniform(c, c.size(), ResampleMode::kSpline).size());
  }
}
BENCHMARK(BM_SplineResample)->RangeMultiplier(4)->Range(256, 4096);

}  // namespace
BENCHMARK_MAIN();
