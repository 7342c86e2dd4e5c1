#include <benchmark/benchmark.h>

#include <vector>

#include "cylbij/bijection.hpp"
#include "cylbij/local_rule.hpp"
#include "cylbij/series.hpp"

using namespace cylbij;

namespace {

void BM_LocalRuleDown(benchmark::State& state) {
  const Partition alpha{6, 5, 5, 3}, beta{6, 6, 5, 2}, lambda{7, 6, 5, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(burge_down(alpha, beta, lambda));
}
BENCHMARK(BM_LocalRuleDown);

void BM_LocalRuleUp(benchmark::State& state) {
  const Partition alpha{6, 5, 5, 3}, beta{6, 6, 5, 2}, nu{6, 5, 4, 2};
  for (auto _ : state) benchmark::DoNotOptimize(burge_up(alpha, beta, 1, nu));
}
BENCHMARK(BM_LocalRuleUp);

void BM_CppSeries(benchmark::State& state) {
  const auto p = Profile::parse("11010");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cpp_series(p, order, 1));
}
BENCHMARK(BM_CppSeries)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_PairsSeries(benchmark::State& state) {
  const auto p = Profile::parse("11010");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairs_series(p, order));
}
BENCHMARK(BM_PairsSeries)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_BorodinRhs(benchmark::State& state) {
  const auto p = Profile::parse("11010");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(borodin_rhs_series(p, order));
}
BENCHMARK(BM_BorodinRhs)->Arg(20)->Arg(100);

void BM_Phi(benchmark::State& state) {
  const auto p = Profile::parse("11010");
  std::vector<CylindricPlanePartition> cpps;
  for_each_cpp(p, state.range(0), [&](const CylindricPlanePartition& c) { cpps.push_back(c); });
  for (auto _ : state)
    for (const auto& c : cpps) benchmark::DoNotOptimize(phi(c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cpps.size()));
}
BENCHMARK(BM_Phi)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Psi(benchmark::State& state) {
  const auto p = Profile::parse("11010");
  std::vector<std::pair<Partition, LabelledCylindricDiagram>> pairs;
  for_each_pair(p, state.range(0), [&](const Partition& g, const LabelledCylindricDiagram& d) {
    pairs.emplace_back(g, d);
  });
  for (auto _ : state)
    for (const auto& [g, d] : pairs) benchmark::DoNotOptimize(psi(g, d));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pairs.size()));
}
BENCHMARK(BM_Psi)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
