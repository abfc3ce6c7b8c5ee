#include "ncspace/expr/eval.hpp"
#include "ncspace/expr/parser.hpp"
#include "ncspace/verify/catalog.hpp"

#include <benchmark/benchmark.h>

using namespace ncspace;

static void BM_NormalFormCoordinateCommutator(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // Fresh algebra each round so the word memo starts empty.
    const algebra::PoincareAlgebra alg(d);
    benchmark::DoNotOptimize(alg.commutator(alg.coordinate(0), alg.coordinate(d - 1)));
  }
}
BENCHMARK(BM_NormalFormCoordinateCommutator)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_NormalFormWarm(benchmark::State& state) {
  const algebra::PoincareAlgebra alg(4);
  const auto x = alg.coordinate(1) * alg.coordinate(2) * alg.momentum(0);
  alg.normal_form(x);
  for (auto _ : state) benchmark::DoNotOptimize(alg.normal_form(x));
}
BENCHMARK(BM_NormalFormWarm)->Unit(benchmark::kMicrosecond);

static void BM_VerifyIdentity(benchmark::State& state) {
  const auto id = verify::catalog()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(verify::identity_name(id)));
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify(id, 4));
}
BENCHMARK(BM_VerifyIdentity)->DenseRange(0, 10)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify_all(d));
}
BENCHMARK(BM_VerifyAll)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ParseFormat(benchmark::State& state) {
  const algebra::PoincareAlgebra alg(4);
  const std::string text = "nf(comm(XT[1], XT[2]) + 3/2i*th[0,1]*P[0]*J[1,2])";
  for (auto _ : state) benchmark::DoNotOptimize(expr::format(expr::evaluate(expr::parse(text), alg)));
}
BENCHMARK(BM_ParseFormat)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
