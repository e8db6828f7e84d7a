#include <benchmark/benchmark.h>

#include "lrscatter/cones.h"
#include "lrscatter/transitions.h"

namespace lrscatter {
namespace {

void BM_PrincipalCone(benchmark::State& state) {
  auto w = LongestWord(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(PrincipalCone(w));
}
BENCHMARK(BM_PrincipalCone)->DenseRange(3, 6);

void BM_EnumerateReducedWords(benchmark::State& state) {
  auto w0 = Permutation::Longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateReducedWords(w0));
}
BENCHMARK(BM_EnumerateReducedWords)->DenseRange(3, 5);

void BM_Transition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = LexMinLongestWord(n), b = LongestWord(n);
  auto c = ParamCollection::ForPermutation(Permutation::Longest(n));
  int k = 0;
  for (const auto& p : c.keys()) c.Set(p.i, p.j, k++ % 3);
  for (auto _ : state) benchmark::DoNotOptimize(Transition(a, b, c));
}
BENCHMARK(BM_Transition)->DenseRange(3, 6);

}  // namespace
}  // namespace lrscatter
