#include <benchmark/benchmark.h>

#include "peiffer/magnus.hpp"
#include "peiffer/random.hpp"
#include "peiffer/shadow.hpp"
#include "peiffer/wu.hpp"

using namespace peiffer;

static void BM_WordMultiply(benchmark::State& state) {
  Rng rng(case_seed(1, 0));
  Word u = random_word(rng, 3, static_cast<int>(state.range(0)));
  Word v = random_word(rng, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(u, v));
}
BENCHMARK(BM_WordMultiply)->Arg(16)->Arg(256)->Arg(4096);

static void BM_MagnusExpand(benchmark::State& state) {
  Rng rng(case_seed(2, 0));
  Word w = random_word(rng, 2, 64);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(magnus_expand(w, d));
}
BENCHMARK(BM_MagnusExpand)->Arg(3)->Arg(5)->Arg(7);

static void BM_SphereShadow(benchmark::State& state) {
  ColoredPresentation pres = wu_presentation(2).presentation;
  const long long p = state.range(0);
  for (auto _ : state) {
    Shadow shadow(pres, p, 3);
    benchmark::DoNotOptimize(shadow.quotient_order());
  }
}
BENCHMARK(BM_SphereShadow)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
