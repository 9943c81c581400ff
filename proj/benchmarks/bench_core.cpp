#include <benchmark/benchmark.h>

#include "csamot/csa.hpp"
#include "csamot/geometry.hpp"
#include "csamot/gl_motive.hpp"
#include "csamot/hyperplane_section.hpp"
#include "csamot/schubert.hpp"
#include "csamot/slice_ss.hpp"

using namespace csamot;

static void BM_SchurProduct(benchmark::State& state) {
  const auto x = GrChowClass::schubert(kGr36, parse_partition("(2,1)"));
  const auto y = GrChowClass::schubert(kGr36, parse_partition("(2,1,1)"));
  for (auto _ : state) benchmark::DoNotOptimize(schur_product(x, y));
}
BENCHMARK(BM_SchurProduct);

static void BM_SmithForm(benchmark::State& state) {
  const IntMatrix m = tate_iso_matrix(alpha_collection());
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithForm);

static void BM_ChartSweep(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_charts(degree));
}
BENCHMARK(BM_ChartSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_QuadricIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_quadric_identity(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_QuadricIdentity)->Arg(0)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_D2Matrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int q = 1; q <= n * (n + 1) / 2; ++q) benchmark::DoNotOptimize(d2_coefficients_from_chern(n, q));
}
BENCHMARK(BM_D2Matrix)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SpectralSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(small_weight_table(3, 3));
}
BENCHMARK(BM_SpectralSequence);

static void BM_RightIdeals(benchmark::State& state) {
  const SplitAlgebra alg(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_right_ideals(alg, 2));
}
BENCHMARK(BM_RightIdeals);

BENCHMARK_MAIN();
