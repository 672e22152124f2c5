#include <benchmark/benchmark.h>

#include <random>

#include "isotypic/report.hpp"

using namespace isotypic;

namespace {

std::string data(const std::string& rel) { return std::string(ISOTYPIC_DATA_DIR) + "/" + rel; }

GroupPtr group(const std::string& name) { return load_group_file(data("groups/" + name + ".json")).group; }

GroupAnalysis analysis(const std::string& name) {
  auto src = load_group_file(data("groups/" + name + ".json"));
  AnalysisOptions opts;
  opts.schur = src.schur;
  return GroupAnalysis(src.group, std::nullopt, opts);
}

void BM_CosetEnumeration(benchmark::State& state) {
  const json j = read_json_file(data("groups/appendix_a.json"));
  for (auto _ : state) benchmark::DoNotOptimize(load_group(j).group->order());
}
BENCHMARK(BM_CosetEnumeration)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  auto g = group(state.range(0) == 0 ? "sl23" : "appendix_a");
  for (auto _ : state) benchmark::DoNotOptimize(compute_character_table(g).size());
}
BENCHMARK(BM_CharacterTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SubgroupLattice(benchmark::State& state) {
  auto g = group("appendix_a");
  for (auto _ : state) benchmark::DoNotOptimize(SubgroupLattice(g).size());
}
BENCHMARK(BM_SubgroupLattice)->Unit(benchmark::kMillisecond);

void BM_AlgebraMultiply(benchmark::State& state) {
  auto g = group("appendix_a");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  QElement a(g, Rational(0)), b(g, Rational(0));
  for (Element x = 0; x < g->order(); ++x) {
    a[x] = Rational(d(rng));
    b[x] = Rational(d(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_AlgebraMultiply)->Unit(benchmark::kMicrosecond);

void BM_FullReport(benchmark::State& state) {
  auto a = analysis("appendix_a");
  for (auto _ : state) benchmark::DoNotOptimize(full_report(a).verdicts.size());
}
BENCHMARK(BM_FullReport)->Unit(benchmark::kMillisecond);

void BM_Analysis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analysis("appendix_a").irreps().size());
}
BENCHMARK(BM_Analysis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
