// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to taste.

#include <benchmark/benchmark.h>

#include "degenkit/ar_component.hpp"
#include "degenkit/families.hpp"
#include "degenkit/shapes.hpp"

using namespace degenkit;

namespace {

const ARComponent& wild_d_window() {
  static const auto z = knit(catalog("wildD(7)"), 20);
  return z;
}

const ShapeContext& v3_pair() {
  static const auto q = catalog("Vm(3)");
  static const ShapeContext ctx(q, {q.index("a"), 0}, {q.index("a"), 5});
  return ctx;
}

const ShapeContext& s_pair() {
  static const auto d = s_family(2, 2);
  return d.context;
}

void hom_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hom_table_serial(wild_d_window()));
}
void hom_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hom_table_parallel(wild_d_window()));
}

void shapes_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_shapes_serial(v3_pair()));
}
void shapes_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_shapes(v3_pair()));
}

void minimal_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_minimal_shapes_serial(s_pair()));
}
void minimal_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_minimal_shapes(s_pair()));
}

}  // namespace

BENCHMARK(hom_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(hom_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(shapes_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(shapes_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(minimal_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(minimal_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
