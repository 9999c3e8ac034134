#include <benchmark/benchmark.h>

#include <random>

#include "splicekit/arith.hpp"
#include "splicekit/family.hpp"
#include "splicekit/monodromy.hpp"
#include "splicekit/plumbing.hpp"
#include "splicekit/splice.hpp"
#include "splicekit/sweep.hpp"

using namespace splicekit;

namespace {

// Tridiagonal chain of -2 entries; det = (-1)^n (n + 1).
IntMatrix chain_matrix(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

void BM_Det(benchmark::State& state) {
  const IntMatrix m = chain_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Det)->RangeMultiplier(2)->Range(8, 128)->Complexity();

// Ratio of consecutive Fibonacci numbers has the longest expansion for its size.
void BM_HJExpand(benchmark::State& state) {
  BigInt a = 1, b = 1;
  for (int64_t i = 0; i < state.range(0); ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  const BigRational x = make_rational(b, a);
  for (auto _ : state) benchmark::DoNotOptimize(hj_expand(x));
}
BENCHMARK(BM_HJExpand)->Arg(10)->Arg(40)->Arg(160);

std::vector<PlumbingGraph> sweep_graphs(Family fam, std::size_t n) {
  std::vector<PlumbingGraph> out;
  for (const auto& p : sample_params(fam, n, 7)) out.push_back(build_plumbing(p));
  return out;
}

void BM_ReduceToMorrow(benchmark::State& state) {
  const auto graphs = sweep_graphs(static_cast<Family>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_morrow(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_ReduceToMorrow)
    ->Arg(static_cast<int>(Family::F1))
    ->Arg(static_cast<int>(Family::F2))
    ->Arg(static_cast<int>(Family::F3));

void BM_BuildFamily(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::vector<FamilyInstance> insts;
  for (const auto& p : sample_params(static_cast<Family>(state.range(0)), 16, 3)) insts.push_back(sample_instance(p, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_family(insts[i++ % insts.size()]));
}
BENCHMARK(BM_BuildFamily)
    ->Arg(static_cast<int>(Family::F1))
    ->Arg(static_cast<int>(Family::F2))
    ->Arg(static_cast<int>(Family::F3));

void BM_FreeProbe(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(free_probe(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FreeProbe)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
