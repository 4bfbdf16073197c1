#include <benchmark/benchmark.h>

#include "srreal/realizability.hpp"

namespace {

// n degree-4 vertices on one facet: every pair needs its own block.
srreal::ComplexWithDegrees fours(int n) {
  std::vector<srreal::VertexDecl> v;
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) {
    ids.push_back("a" + std::to_string(i));
    v.push_back({ids.back(), 4});
  }
  return srreal::ComplexWithDegrees(std::move(v), {srreal::Simplex(ids)});
}

// Inputs with no partition, so the search runs to exhaustion.
srreal::ComplexWithDegrees hopeless(int n) {
  auto k = fours(n);
  auto v = k.vertices();
  v.push_back({"z", 6});
  auto f = k.facets();
  f.push_back(srreal::Simplex{"z"});
  return srreal::ComplexWithDegrees(std::move(v), std::move(f));
}

void BM_FindPartition(benchmark::State& state) {
  const auto k = fours(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srreal::find_partition(k));
}
BENCHMARK(BM_FindPartition)->Arg(4)->Arg(8)->Arg(12);

void BM_FindPartitionExhaustive(benchmark::State& state) {
  const auto k = hopeless(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srreal::find_partition(k));
}
BENCHMARK(BM_FindPartitionExhaustive)->Arg(4)->Arg(6)->Arg(8);

void BM_FullReport(benchmark::State& state) {
  const auto k = fours(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srreal::full_report(k));
}
BENCHMARK(BM_FullReport)->Arg(6);

}  // namespace
