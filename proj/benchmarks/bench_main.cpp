#include <benchmark/benchmark.h>

#include <random>

#include "ultrazeta/fourier.hpp"
#include "ultrazeta/igusa.hpp"
#include "ultrazeta/laurent.hpp"
#include "ultrazeta/sobolev.hpp"

using namespace ultrazeta;

static void BM_FourierTransform(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto g = random_grid(GridShape::make(FieldSpec::qp(static_cast<unsigned>(state.range(0))), 2, 2, 2), rng);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_transform(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_FourierTransform)->Arg(2)->Arg(3)->Arg(5);

static void BM_SobolevNorm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto g = random_grid(GridShape::make(FieldSpec::qp(3), 2, 2, 2), rng);
  for (auto _ : state) benchmark::DoNotOptimize(sobolev_norm(g, 4));
}
BENCHMARK(BM_SobolevNorm);

static void BM_IgusaSeries(benchmark::State& state) {
  auto f = IntPolynomial::parse("x1^2+x2^2");
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(igusa_series(FieldSpec::qp(3), f, terms));
}
BENCHMARK(BM_IgusaSeries)->Arg(8)->Arg(12)->Arg(16);

static void BM_LaurentAtMinusOne(benchmark::State& state) {
  auto z = monomial_zeta_closed(3, {1, 2, 3});
  const int hi = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laurent_at(z, -1, -3, hi));
}
BENCHMARK(BM_LaurentAtMinusOne)->Arg(2)->Arg(6);

BENCHMARK_MAIN();
