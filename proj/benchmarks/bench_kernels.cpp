#include <benchmark/benchmark.h>

#include "fncalc/connection.hpp"
#include "fncalc/forms.hpp"
#include "fncalc/random.hpp"
#include "fncalc/verify.hpp"

using namespace fncalc;

namespace {

void BM_PolyMultiply(benchmark::State& state) {
  const Chart chart = standard_chart(static_cast<std::size_t>(state.range(0)));
  Rng rng(1);
  const RandomShape shape{4, 8, 2, 2};
  const Poly a = random_poly(rng, chart, shape), b = random_poly(rng, chart, shape);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->DenseRange(2, 6, 2);

// Frölicher-Nijenhuis bracket of two random vector-valued forms of the given degree.
void BM_FnBracket(benchmark::State& state) {
  const Chart chart = standard_chart(3);
  const int degree = static_cast<int>(state.range(0));
  Rng rng(2);
  const VectorForm K = random_vector_form(rng, chart, degree), L = random_vector_form(rng, chart, degree);
  for (auto _ : state) benchmark::DoNotOptimize(fn_bracket(K, L));
}
BENCHMARK(BM_FnBracket)->DenseRange(0, 1);

void BM_Curvature(benchmark::State& state) {
  const Chart chart = standard_chart(static_cast<std::size_t>(state.range(0)));
  const Connection c = random_connection(chart, 1, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(curvature(c));
}
BENCHMARK(BM_Curvature)->DenseRange(3, 5);

void BM_SuiteTrial(benchmark::State& state, const char* suite) {
  SuiteOptions opts;
  opts.trials = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_suite(suite, opts));
    ++opts.seed;
  }
}
BENCHMARK_CAPTURE(BM_SuiteTrial, bianchi, "bianchi")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteTrial, thm28, "thm28")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
