#include <benchmark/benchmark.h>

#include "hunt/bounds.hpp"
#include "hunt/constructions.hpp"
#include "hunt/engine.hpp"
#include "hunt/families.hpp"
#include "hunt/gadgets.hpp"
#include "hunt/layered.hpp"
#include "hunt/recognizer.hpp"
#include "hunt/separators.hpp"
#include "hunt/solver.hpp"

namespace {

using namespace hunt;

void BM_HuntingNumberGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  Graph g = grid_graph(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(hunting_number(g).value);
}
BENCHMARK(BM_HuntingNumberGrid)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HuntingNumberCube(benchmark::State& state) {
  Graph g = hypercube_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(hunting_number(g).value);
}
BENCHMARK(BM_HuntingNumberCube)->Unit(benchmark::kMillisecond);

void BM_HuntingNumberThreads(benchmark::State& state) {
  Graph g = grid_graph(4, 4);
  SearchLimits limits;
  limits.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hunting_number(g, SolveQuery{}, limits).value);
}
BENCHMARK(BM_HuntingNumberThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LayeredCut(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.1, 0.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(layered_min_cut(g, 6).value);
}
BENCHMARK(BM_LayeredCut)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Recognize(benchmark::State& state) {
  Graph g = spider_graph(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g).one_hunterwin);
}
BENCHMARK(BM_Recognize)->Arg(100)->Arg(1000);

void BM_RecognizeViaDoubleCover(benchmark::State& state) {
  Graph g = spider_graph(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognize(g, RecognizerMethod::via_bg).one_hunterwin);
  }
}
BENCHMARK(BM_RecognizeViaDoubleCover)->Arg(100)->Arg(1000);

void BM_ThreePartitionVerify(benchmark::State& state) {
  ThreePartitionGadget gad = gadget_3partition({2, 2, 2, 2, 3, 3});
  Strategy s = proof_strategy_3partition(gad, {{0, 1, 4}, {2, 3, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(is_win(verify_strategy(gad.graph, gad.start, s)));
}
BENCHMARK(BM_ThreePartitionVerify);

void BM_H2BruteForce(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 0.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(h2_bruteforce(g));
}
BENCHMARK(BM_H2BruteForce)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BssOracle(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 0.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bss_oracle(g).objective);
}
BENCHMARK(BM_BssOracle)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
