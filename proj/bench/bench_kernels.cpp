// Serial reference vs OpenMP kernel timings. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "morsecert/corpus.hpp"
#include "morsecert/cutset.hpp"
#include "morsecert/parallel.hpp"

using namespace morsecert;

namespace {

SimplicialGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(labels[i], labels[j]);
    }
  }
  return SimplicialGraph(labels, edges);
}

std::vector<SimplicialGraph> batch(int count, int n, double p) {
  std::mt19937_64 rng(7);
  std::vector<SimplicialGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(rng, n, p));
  return out;
}

void BM_InducedCycles(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto g = random_graph(rng, 22, 0.2);
  bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto cycles = parallel ? induced_cycles_at_least_parallel(g, g.vertices(), 5)
                           : induced_cycles_at_least(g, g.vertices(), 5);
    benchmark::DoNotOptimize(cycles);
  }
}
BENCHMARK(BM_InducedCycles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyBatch(benchmark::State& state) {
  auto graphs = batch(400, 9, 0.35);
  bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto v = classify_batch(graphs, GroupKind::RACG, DecideOptions{}, parallel);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ClassifyBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CutsetSweep(benchmark::State& state) {
  auto g = edgeless_graph(5);
  auto split = make_split(g, g.set_of(std::vector<std::string>{"a", "b", "c"}),
                          g.set_of(std::vector<std::string>{"c", "d", "e"}));
  CutsetChecker checker(g, split, 7);
  bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto s = checker.sweep(5, parallel);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CutsetSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
