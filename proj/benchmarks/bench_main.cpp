// Microbenchmarks for the hot paths: exact spectral computation, the
// classification sweep, Krein tables, code enumeration and the mid-size
// graph builders.  The 891-vertex dual polar builder is deliberately left
// to the acceptance suite, which owns its timing budget.

#include <benchmark/benchmark.h>

#include "drg/classify.hpp"
#include "drg/constructions.hpp"
#include "drg/graph.hpp"
#include "drg/idempotent.hpp"
#include "drg/krein.hpp"
#include "drg/spectrum.hpp"

namespace {

using namespace drg;

IntersectionArray dpa5_array() {
  return IntersectionArray::validate({42, 40, 32}, {1, 5, 21});
}

void BM_spectrum_dpa5(benchmark::State& state) {
  IntersectionArray arr = dpa5_array();
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(arr));
}
BENCHMARK(BM_spectrum_dpa5);

void BM_charpoly_dpa5(benchmark::State& state) {
  IntersectionArray arr = dpa5_array();
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(arr));
}
BENCHMARK(BM_charpoly_dpa5);

void BM_krein_table_dpa5(benchmark::State& state) {
  IntersectionArray arr = dpa5_array();
  SpectralData sd = spectrum(arr);
  for (auto _ : state) benchmark::DoNotOptimize(krein_parameters(arr, sd));
}
BENCHMARK(BM_krein_table_dpa5);

void BM_classify_diameter3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(3));
}
BENCHMARK(BM_classify_diameter3);

void BM_ternary_golay_enumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ternary_golay_code());
}
BENCHMARK(BM_ternary_golay_enumeration);

void BM_binary_golay_enumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binary_golay_code());
}
BENCHMARK(BM_binary_golay_enumeration);

void BM_build_golay3_coset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_golay3_coset());
}
BENCHMARK(BM_build_golay3_coset);

void BM_build_dual_polar_a3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_dual_polar(2));
}
BENCHMARK(BM_build_dual_polar_a3);

void BM_idempotent_grid(benchmark::State& state) {
  Graph g = build_grid_3x3();
  DistanceData dd(g);
  IntersectionArray arr = require_intersection_array(g, dd);
  for (auto _ : state)
    benchmark::DoNotOptimize(ExactIdempotent(g, dd, arr, Rational(-2)));
}
BENCHMARK(BM_idempotent_grid);

void BM_distance_data_coset(benchmark::State& state) {
  Graph g = build_golay3_coset();
  for (auto _ : state) benchmark::DoNotOptimize(DistanceData(g));
}
BENCHMARK(BM_distance_data_coset);

}  // namespace

BENCHMARK_MAIN();
