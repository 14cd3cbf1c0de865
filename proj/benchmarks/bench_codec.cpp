#include <benchmark/benchmark.h>

#include "zeck/beatty.hpp"
#include "zeck/codec.hpp"
#include "zeck/fib.hpp"

namespace {

void BM_EncodeSmall(benchmark::State& state) {
  zeck::Integer n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::encode(n));
    n += 7919;
  }
}
BENCHMARK(BM_EncodeSmall);

void BM_EncodeFib(benchmark::State& state) {
  const zeck::Integer n = zeck::fib(static_cast<std::size_t>(state.range(0))) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(zeck::encode(n));
}
BENCHMARK(BM_EncodeFib)->Arg(50)->Arg(200)->Arg(1000);

void BM_BlockAt(benchmark::State& state) {
  const auto w = zeck::DigitBlock::parse("0101");
  zeck::Integer n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::block_at(n, w, 3));
    ++n;
  }
}
BENCHMARK(BM_BlockAt);

void BM_WythoffA(benchmark::State& state) {
  zeck::Integer n = boost::multiprecision::pow(zeck::Integer(10), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::wythoff_A(n));
    ++n;
  }
}
BENCHMARK(BM_WythoffA)->Arg(6)->Arg(30)->Arg(300);

}  // namespace
