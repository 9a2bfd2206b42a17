#include <benchmark/benchmark.h>

#include "curvelab/curvelab.hpp"

using namespace curvelab;

namespace {

const ProjPoint& vertex() {
  static const ProjPoint p = ProjPoint::from_rationals({Rational(0), Rational(0), Rational(1)});
  return p;
}

void BM_Factor(benchmark::State& state) {
  std::vector<Rational> c(static_cast<std::size_t>(state.range(0)) + 1, Rational(0));
  c.front() = Rational(-2);
  c.back() = Rational(1);
  const QPoly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(factor_rational(p));
}
BENCHMARK(BM_Factor)->Arg(4)->Arg(8)->Arg(12);

void BM_SingularPoints(benchmark::State& state) {
  const PlaneCurve c = random_singular_curve(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(c));
}
BENCHMARK(BM_SingularPoints)->DenseRange(4, 6);

void BM_ResolvePloski(benchmark::State& state) {
  const CurveGerm g = localize(ploski_curve(static_cast<int>(state.range(0))), vertex());
  for (auto _ : state) benchmark::DoNotOptimize(resolve(g));
}
BENCHMARK(BM_ResolvePloski)->DenseRange(4, 8, 2);

void BM_LctNormalForm(benchmark::State& state) {
  const CurveGerm g = make_germ(normal_form_germ(ThresholdTag::TildeT, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lct_of_germ(g));
}
BENCHMARK(BM_LctNormalForm)->DenseRange(3, 8);

void BM_Classify(benchmark::State& state) {
  const PlaneCurve c = wall_quintic();
  for (auto _ : state) benchmark::DoNotOptimize(classify(c, vertex()));
}
BENCHMARK(BM_Classify);

void BM_Stability(benchmark::State& state) {
  const PlaneCurve c = ploski_curve(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stability(c));
}
BENCHMARK(BM_Stability)->DenseRange(4, 6);

void BM_SmoothnessCertificate(benchmark::State& state) {
  const SurfaceForm base = star_surface(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SurfaceForm s = base;
    benchmark::DoNotOptimize(verify_smooth(s));
  }
}
BENCHMARK(BM_SmoothnessCertificate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
