#include <benchmark/benchmark.h>

#include "blanc/certify.hpp"
#include "blanc/render.hpp"
#include "blanc/series.hpp"

using namespace blanc;

namespace {

BlancmangeSpec classic() { return BlancmangeSpec::make(classic_generator(), 1); }

BlancmangeSpec wide() {
  const Rational third(BigInt(1), BigInt(3));
  return BlancmangeSpec::make(Generator::make(4, {0, third, -third, third, 0}), 3);
}

void BM_EvalExactBadic(benchmark::State& state) {
  const auto spec = wide();
  const auto m = static_cast<int>(state.range(0));
  const auto pt = BAdicPoint::make(spec, ipow(spec.b(), static_cast<unsigned>(m)) - 7, m);
  for (auto _ : state) benchmark::DoNotOptimize(eval_exact_badic(spec, pt));
}
BENCHMARK(BM_EvalExactBadic)->Arg(4)->Arg(16)->Arg(64);

void BM_PartialSum(benchmark::State& state) {
  const auto spec = classic();
  const Rational t(BigInt(1), BigInt(3));
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partial_sum(spec, n, t));
}
BENCHMARK(BM_PartialSum)->Arg(8)->Arg(32)->Arg(64);

void BM_Certificate(benchmark::State& state) {
  const auto spec = wide();
  const Interval iv = Interval::make(Rational(BigInt(1), BigInt(7)), Rational(BigInt(1), BigInt(7)) + pow2_neg(30));
  for (auto _ : state) benchmark::DoNotOptimize(nonaffine_certificate(spec, iv));
}
BENCHMARK(BM_Certificate);

void BM_RenderFrame(benchmark::State& state) {
  const RenderJob job{classic(), {2, 4, 6, 8, 10, 12}, Rational(BigInt(1), BigInt(3)), Rational(4), 6, 401, {}};
  for (auto _ : state) benchmark::DoNotOptimize(compute_frame(job, 5));
}
BENCHMARK(BM_RenderFrame)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
