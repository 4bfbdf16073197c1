#include <benchmark/benchmark.h>

#include "srreal/verifier.hpp"

namespace {

// x4 joined to a grid of y_i (degree 6) and z_j (degree 8) with y_i y_k = z_j z_l = 0.
srreal::ComplexWithDegrees grid(int n) {
  std::vector<srreal::VertexDecl> v = {{"x4", 4}};
  for (int i = 0; i < n; ++i) {
    v.push_back({"y" + std::to_string(i), 6});
    v.push_back({"z" + std::to_string(i), 8});
  }
  std::vector<srreal::Simplex> f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f.push_back(srreal::Simplex{"x4", "y" + std::to_string(i), "z" + std::to_string(j)});
  return srreal::ComplexWithDegrees(std::move(v), std::move(f));
}

void BM_BuildDiagram(benchmark::State& state) {
  const auto k = grid(static_cast<int>(state.range(0)));
  const srreal::Partition p{{k.sorted_ids()}};
  for (auto _ : state) benchmark::DoNotOptimize(srreal::build_diagram(k, p));
}
BENCHMARK(BM_BuildDiagram)->Arg(2)->Arg(4);

void BM_VerifyConstruction(benchmark::State& state) {
  const auto k = grid(static_cast<int>(state.range(0)));
  const auto d = srreal::build_diagram(k, srreal::Partition{{k.sorted_ids()}});
  for (auto _ : state) benchmark::DoNotOptimize(srreal::verify_construction(k, d, 40));
}
BENCHMARK(BM_VerifyConstruction)->Arg(2)->Arg(3);

void BM_PushoutRecurrence(benchmark::State& state) {
  const auto k = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srreal::pushout_recurrence_check(k, 40));
}
BENCHMARK(BM_PushoutRecurrence)->Arg(2)->Arg(4);

}  // namespace
