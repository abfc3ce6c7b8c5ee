#include "ncspace/numlab/suite.hpp"

#include <benchmark/benchmark.h>

using namespace ncspace::numlab;

static void BM_ApplyCoordinate(benchmark::State& state) {
  const auto grid = MomentumGrid::make({static_cast<int>(state.range(0)), 6.0, 1.0});
  const auto phi = probe_state(grid);
  const auto op = build_operator(OperatorName::X(1), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(phi));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid->size()));
}
BENCHMARK(BM_ApplyCoordinate)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

static void BM_CommutatorResidual(benchmark::State& state) {
  const auto grid = MomentumGrid::make({static_cast<int>(state.range(0)), 6.0, 1.0});
  const auto phi = probe_state(grid);
  const auto x1 = build_operator(OperatorName::X(1), 1.0);
  const auto x2 = build_operator(OperatorName::X(2), 1.0);
  const auto expected = Complex(0.0, 1.0) * lorentz_operator(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_residual(x1, x2, expected, phi));
}
BENCHMARK(BM_CommutatorResidual)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

static void BM_GridConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(MomentumGrid::make({static_cast<int>(state.range(0)), 6.0, 1.0}));
}
BENCHMARK(BM_GridConstruction)->Arg(65)->Arg(129)->Unit(benchmark::kMillisecond);
