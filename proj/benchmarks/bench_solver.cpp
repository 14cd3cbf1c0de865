#include <benchmark/benchmark.h>

#include "zeck/oracle.hpp"
#include "zeck/solver.hpp"

namespace {

void BM_SolveBlock(benchmark::State& state) {
  const auto w = zeck::DigitBlock::parse("0100100101");
  for (auto _ : state) benchmark::DoNotOptimize(zeck::solve_block(w));
}
BENCHMARK(BM_SolveBlock);

void BM_PositionalEnumerate(benchmark::State& state) {
  const auto w = zeck::DigitBlock::parse("00");
  const auto set = zeck::solve_positional(w, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeck::union_enumerate(set, 1000));
}
BENCHMARK(BM_PositionalEnumerate)->Arg(0)->Arg(2)->Arg(6);

void BM_BruteFirst(benchmark::State& state) {
  const auto w = zeck::DigitBlock::parse("00");
  for (auto _ : state) benchmark::DoNotOptimize(zeck::brute_first(w, 2, 1000));
}
BENCHMARK(BM_BruteFirst);

void BM_Tree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeck::fibonacci_tree(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Tree)->Arg(8)->Arg(12);

}  // namespace
