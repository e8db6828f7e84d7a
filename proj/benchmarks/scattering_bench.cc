#include <benchmark/benchmark.h>

#include "lrscatter/oracles.h"
#include "lrscatter/scattering.h"
#include "lrscatter/web.h"

namespace lrscatter {
namespace {

void BM_StarProduct(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  BasisTuple a({0, e, e}), b({1, e, e});
  for (auto _ : state) benchmark::DoNotOptimize(StarProduct(a, b));
}
BENCHMARK(BM_StarProduct)->DenseRange(1, 4);

DominantWeight Staircase(int N) {
  std::vector<int> v(N);
  for (int i = 0; i < N; ++i) v[i] = N - 1 - i;
  return DominantWeight(v);
}

DominantWeight Doubled(int N) {
  std::vector<int> v(N);
  for (int i = 0; i < N; ++i) v[i] = 2 * (N - 1 - i);
  return DominantWeight(v);
}

void BM_LrScattering(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto l = Staircase(N), n = Doubled(N);
  for (auto _ : state) benchmark::DoNotOptimize(LrCoefficient(l, l, n));
}
BENCHMARK(BM_LrScattering)->DenseRange(2, 4);

void BM_LrTableau(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto l = Staircase(N).ToPartition(), n = Doubled(N).ToPartition();
  for (auto _ : state)
    benchmark::DoNotOptimize(oracles::LrTableauCount(l, l, n));
}
BENCHMARK(BM_LrTableau)->DenseRange(2, 4);

void BM_LrPieri(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto l = Staircase(N).ToPartition(), n = Doubled(N).ToPartition();
  for (auto _ : state)
    benchmark::DoNotOptimize(oracles::PieriCoefficient(l, l, n, N));
}
BENCHMARK(BM_LrPieri)->DenseRange(2, 4);

void BM_CountBz(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto l = Staircase(N), n = Doubled(N);
  for (auto _ : state) benchmark::DoNotOptimize(CountBzPatterns(l, l, n));
}
BENCHMARK(BM_CountBz)->DenseRange(2, 4);

}  // namespace
}  // namespace lrscatter
