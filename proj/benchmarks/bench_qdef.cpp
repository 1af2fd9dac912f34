#include <benchmark/benchmark.h>

#include "qdef/qdef.hpp"

using namespace qdef;

static void BM_BuildUnirrep(benchmark::State& state) {
  const QContext ctx(0.5);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_aq1_unirrep(N, ColourLabel::minus(), ctx));
}
BENCHMARK(BM_BuildUnirrep)->Arg(2)->Arg(8)->Arg(32);

static void BM_RMatrix(benchmark::State& state) {
  const QContext ctx(0.5);
  const int N = static_cast<int>(state.range(0));
  const Unirrep a = build_aq1_unirrep(N, ColourLabel::plus(), ctx);
  const Unirrep b = build_aq1_unirrep(N, ColourLabel::minus(), ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(r_matrix(a, b));
}
BENCHMARK(BM_RMatrix)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_QCG(benchmark::State& state) {
  const QContext ctx(0.5);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(qcg(N, N, ctx));
}
BENCHMARK(BM_QCG)->Arg(1)->Arg(3)->Arg(6);

static void BM_HopfAxioms(benchmark::State& state) {
  const QContext ctx(0.5);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_hopf_axioms({N, N, N}, ctx));
}
BENCHMARK(BM_HopfAxioms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ColouredYbe(benchmark::State& state) {
  const QContext ctx(0.5);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_coloured_ybe({N, N, N}, ctx));
}
BENCHMARK(BM_ColouredYbe)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
