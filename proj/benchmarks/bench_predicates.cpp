#include <benchmark/benchmark.h>

#include "opcheck/corpus.hpp"
#include "opcheck/exhibits.hpp"

using namespace opcheck;

static void HermEig(benchmark::State& state) {
  Rng rng(7);
  const auto h = random_hermitian(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(HermEig)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void QuasinormalMatrix(benchmark::State& state) {
  Rng rng(7);
  const FiniteMatrixOp c(random_complex_matrix(rng, static_cast<int>(state.range(0))));
  const TolerancePolicy tol;
  for (auto _ : state) benchmark::DoNotOptimize(quasinormal_test(c, tol));
}
BENCHMARK(QuasinormalMatrix)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void ParanormalDecisive(benchmark::State& state) {
  Rng rng(11);
  const FiniteMatrixOp c(random_complex_matrix(rng, static_cast<int>(state.range(0))));
  const TolerancePolicy tol;
  for (auto _ : state) benchmark::DoNotOptimize(paranormal_falsify(c, tol));
}
BENCHMARK(ParanormalDecisive)->Arg(4)->Arg(8);

static void TreeShiftApply(benchmark::State& state) {
  const Prz2Exhibit e = build_prz2_default();
  ProbeConfig cfg;
  cfg.seed = 3;
  cfg.num_probes = 1;
  for (const auto& v : orbit_window(e.op.tree(), 6)) cfg.window.push_back(Label::vertex(v));
  const auto probes = make_probes(cfg);
  const LocalOperator c = e.op.to_local();
  for (auto _ : state) benchmark::DoNotOptimize(c.apply(probes[0]));
}
BENCHMARK(TreeShiftApply);

static void ProbeGeneration(benchmark::State& state) {
  ProbeConfig cfg;
  cfg.seed = 5;
  cfg.num_probes = static_cast<int>(state.range(0));
  cfg.window = nat_window(64);
  for (auto _ : state) benchmark::DoNotOptimize(make_probes(cfg));
}
BENCHMARK(ProbeGeneration)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
