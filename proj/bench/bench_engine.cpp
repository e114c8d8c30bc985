// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "glpq/mside/suites.hpp"
#include "glpq/tside/algebra.hpp"
#include "glpq/tside/suites.hpp"

using namespace glpq;

namespace {

// A dense element: sum of c_ij a^i d^j (1 + beta + gamma + beta gamma).
Element<RatFunc> dense(const TSide<RatFunc>& t, int span) {
  Element<RatFunc> odd = t.unit() + t.beta() + t.gamma() + t.beta() * t.gamma();
  Element<RatFunc> e = t.zero();
  for (int i = -span; i <= span; ++i) {
    for (int j = -span; j <= span; ++j) {
      e += t.word({{"a", i}, {"d", j}}, t.p().pow(i) + t.q().pow(j)) * odd;
    }
  }
  return e;
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto t = make_exact_tside();
  const auto x = dense(t, static_cast<int>(state.range(0)));
  const auto y = dense(t, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
  state.counters["terms"] = static_cast<double>(x.size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto t = make_exact_tside();
  const auto x = dense(t, static_cast<int>(state.range(0)));
  const auto y = dense(t, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(x.multiply_parallel(y));
  state.counters["terms"] = static_cast<double>(x.size());
}

void BM_Section3(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? ExecMode::Serial : ExecMode::Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(verify_section3(6, mode));
}

void BM_MSide(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? ExecMode::Serial : ExecMode::Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(verify_mside(6, mode));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Section3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MSide)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
