#include <benchmark/benchmark.h>

#include "schur/class_groups.hpp"
#include "schur/magnus.hpp"
#include "schur/rng.hpp"
#include "schur/sigma_iso.hpp"

using namespace schur;

static void BM_TruncatedMul(benchmark::State& state) {
  MagnusAlgebra a(3, 2, static_cast<unsigned>(state.range(0)));
  TruncatedElement x = a.eval(FreeWord::parse("1 2 -1 2 1"));
  TruncatedElement y = a.eval(FreeWord::parse("2 -1 -2 1 -2"));
  for (auto _ : state) benchmark::DoNotOptimize(a.mul(x, y));
}
BENCHMARK(BM_TruncatedMul)->Arg(3)->Arg(4)->Arg(5);

static void BM_EnumerateGroup(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_group(3, 2, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EnumerateGroup)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_NormalClosure(benchmark::State& state) {
  SigmaGroup G = enumerate_group(3, 2, 4);
  CounterRng rng(1, 0);
  const auto& odd = G.odd_elements();
  for (auto _ : state) {
    std::uint32_t a = odd[rng.below(odd.size())], b = odd[rng.below(odd.size())];
    benchmark::DoNotOptimize(normal_closure(G, {a, b}));
  }
}
BENCHMARK(BM_NormalClosure)->Unit(benchmark::kMicrosecond);

static void BM_QuotientAndFingerprint(benchmark::State& state) {
  SigmaGroup G = enumerate_group(3, 2, 4);
  CounterRng rng(2, 0);
  const auto& odd = G.odd_elements();
  for (auto _ : state) {
    std::uint32_t a = odd[rng.below(odd.size())], b = odd[rng.below(odd.size())];
    auto q = quotient(G, normal_closure(G, {a, b}), false);
    benchmark::DoNotOptimize(fingerprint(q.group));
  }
}
BENCHMARK(BM_QuotientAndFingerprint)->Unit(benchmark::kMicrosecond);

static void BM_SigmaAutF23(benchmark::State& state) {
  SigmaGroup G = enumerate_group(3, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_aut_group(G));
}
BENCHMARK(BM_SigmaAutF23)->Unit(benchmark::kMillisecond);

static void BM_MatrixRank(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  FpMatrix m(n, n, 3);
  CounterRng rng(3, 0);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) m.set(r, c, static_cast<std::uint32_t>(rng.below(3)));
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_MatrixRank)->Arg(8)->Arg(32);

static void BM_FormComposition(benchmark::State& state) {
  FormClassGroup cg(-104831);  // largish class group
  CounterRng rng(4, 0);
  for (auto _ : state) {
    std::size_t i = rng.below(cg.class_number()), j = rng.below(cg.class_number());
    benchmark::DoNotOptimize(cg.compose_idx(i, j));
  }
}
BENCHMARK(BM_FormComposition);

static void BM_ClassGroupBuild(benchmark::State& state) {
  for (auto _ : state) {
    FormClassGroup cg(-887303);
    benchmark::DoNotOptimize(cg.class_number());
  }
}
BENCHMARK(BM_ClassGroupBuild)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
