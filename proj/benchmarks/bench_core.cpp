#include <benchmark/benchmark.h>

#include "sfa/bodies.hpp"
#include "sfa/centers.hpp"
#include "sfa/functionals.hpp"
#include "sfa/geometry.hpp"
#include "sfa/inequalities.hpp"

namespace {

using namespace sfa;

ChartBody body(int d) {
  FamilySpec s;
  s.kind = d == 2 ? FamilyKind::RandomSmooth2D : FamilyKind::RandomSmooth3D;
  s.d = d;
  s.seed = 1;
  return generate(s, 0);
}

void BM_SupportDerivs(benchmark::State& state) {
  const ChartBody b = body(static_cast<int>(state.range(0)));
  Vec u = Vec::Ones(b.dim()).normalized();
  for (auto _ : state) benchmark::DoNotOptimize(b.derivs(u));
}
BENCHMARK(BM_SupportDerivs)->Arg(2)->Arg(3);

void BM_Radial(benchmark::State& state) {
  const ChartBody b = body(static_cast<int>(state.range(0)));
  Vec u = Vec::Ones(b.dim()).normalized();
  for (auto _ : state) benchmark::DoNotOptimize(radial(b, u));
}
BENCHMARK(BM_Radial)->Arg(2)->Arg(3);

void BM_FloatingArea(benchmark::State& state) {
  const ChartBody b = body(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const BodyAnalysis a(b, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(omega_p_lambda(a, 1.0));
  }
}
BENCHMARK(BM_FloatingArea)->Args({2, 2})->Args({2, 4})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_DualFit(benchmark::State& state) {
  const ChartBody b = body(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_body(b));
}
BENCHMARK(BM_DualFit)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GhsCenter(benchmark::State& state) {
  const ChartBody b = body(static_cast<int>(state.range(0)));
  CenterOptions o;
  o.build_recentered = false;
  for (auto _ : state) benchmark::DoNotOptimize(ghs_center(b, o));
}
BENCHMARK(BM_GhsCenter)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Summary(benchmark::State& state) {
  const ChartBody b = body(2);
  for (auto _ : state) benchmark::DoNotOptimize(summarize(b));
}
BENCHMARK(BM_Summary)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
