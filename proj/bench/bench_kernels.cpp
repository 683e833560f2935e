// Serial reference vs OpenMP kernels.

#include "torsor/classifier.hpp"

#include <benchmark/benchmark.h>

using namespace torsor;

namespace {

const Curve& rank_one_curve() {
  static const Curve c(6, -6);
  return c;
}

void BM_PointSearchSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounded_point_search_serial(rank_one_curve(), state.range(0)));
  }
}

void BM_PointSearchParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounded_point_search(rank_one_curve(), state.range(0)));
  }
}

void BM_ExampleSearchSerial(benchmark::State& state) {
  const Curve c(1, -1);
  const DescentGroup P = search_descent_group(c, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_examples_serial(c, P, state.range(0)));
  }
}

void BM_ExampleSearchParallel(benchmark::State& state) {
  const Curve c(1, -1);
  const DescentGroup P = search_descent_group(c, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_examples(c, P, state.range(0)));
  }
}

}  // namespace

BENCHMARK(BM_PointSearchSerial)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointSearchParallel)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExampleSearchSerial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExampleSearchParallel)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
