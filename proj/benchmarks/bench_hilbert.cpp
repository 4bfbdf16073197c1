#include <benchmark/benchmark.h>

#include "srreal/sr_ring.hpp"
#include "srreal/verifier.hpp"

namespace {

// Cycle on n vertices with degrees cycling through 2, 4, 6.
srreal::ComplexWithDegrees cycle(int n) {
  std::vector<srreal::VertexDecl> v;
  std::vector<srreal::Simplex> f;
  for (int i = 0; i < n; ++i) v.push_back({"v" + std::to_string(i), 2 + 2 * (i % 3)});
  for (int i = 0; i < n; ++i) {
    f.push_back(srreal::Simplex{"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
  }
  return srreal::ComplexWithDegrees(std::move(v), std::move(f));
}

void BM_SrHilbert(benchmark::State& state) {
  const auto k = cycle(static_cast<int>(state.range(0)));
  const int D = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(srreal::sr_hilbert(k, D));
}
BENCHMARK(BM_SrHilbert)->Args({6, 40})->Args({12, 40})->Args({12, 120})->Args({24, 80});

void BM_BruteOracle(benchmark::State& state) {
  const auto k = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srreal::brute_oracle_hilbert(k, 40));
}
BENCHMARK(BM_BruteOracle)->Arg(4)->Arg(6);

void BM_FreeHilbert(benchmark::State& state) {
  const auto ms = srreal::DegreeMultiset{}.with_twos(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srreal::free_hilbert(ms, 200));
}
BENCHMARK(BM_FreeHilbert)->Arg(8)->Arg(40)->Arg(80);

}  // namespace
