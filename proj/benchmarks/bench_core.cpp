#include <benchmark/benchmark.h>

#include "raneykit/cantor.hpp"
#include "raneykit/completion.hpp"
#include "raneykit/extension.hpp"
#include "raneykit/harness.hpp"
#include "raneykit/morphism.hpp"

using namespace raneykit;

namespace {

/// Discrete algebra on 2^atoms; the largest algebra of its carrier.
AlgebraPtr discrete(std::size_t atoms) {
  return discrete_algebra(std::make_shared<const FiniteLattice>(powerset(atoms)));
}

void BM_EnumerateAlgebras(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mt_algebras(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateAlgebras)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CheckRaney(benchmark::State& state) {
  const auto m = discrete(static_cast<std::size_t>(state.range(0)));
  const auto id = id_raney(m);
  for (auto _ : state) benchmark::DoNotOptimize(check_raney_morphism(id).ok());
}
BENCHMARK(BM_CheckRaney)->DenseRange(2, 6);

void BM_Star(benchmark::State& state) {
  const auto m = discrete(static_cast<std::size_t>(state.range(0)));
  const auto id = id_raney(m);
  for (auto _ : state) benchmark::DoNotOptimize(star(id, id));
}
BENCHMARK(BM_Star)->DenseRange(2, 6);

void BM_Zeta(benchmark::State& state) {
  const auto m = discrete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta(identify(m)));
}
BENCHMARK(BM_Zeta)->DenseRange(1, 3);

void BM_EnvelopeFrames(benchmark::State& state) {
  const auto frames = enumerate_frames(5, 20);
  for (auto _ : state)
    for (const auto& l : frames) benchmark::DoNotOptimize(funayama_envelope_frame(l));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(frames.size()));
}
BENCHMARK(BM_EnvelopeFrames)->Unit(benchmark::kMillisecond);

void BM_CantorHeyting(benchmark::State& state) {
  const auto pts = cantor::points_up_to_depth(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& a : pts)
      for (const auto& b : pts) benchmark::DoNotOptimize(cantor::heyting(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size() * pts.size()));
}
BENCHMARK(BM_CantorHeyting)->Arg(4)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
