#include <benchmark/benchmark.h>

#include "truthlab/coding.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

static void BM_Encode(benchmark::State& state) {
  Rng rng(2);
  std::vector<Formula> pool;
  for (int i = 0; i < 64; ++i)
    pool.push_back(gen::random_formula(rng, static_cast<uint32_t>(state.range(0)), 3));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_Encode)->Arg(4)->Arg(8);

static void BM_DecodeRoundtrip(benchmark::State& state) {
  Rng rng(3);
  std::vector<GodelCode> codes;
  for (int i = 0; i < 64; ++i)
    codes.push_back(
        encode(gen::random_formula(rng, static_cast<uint32_t>(state.range(0)), 3)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(codes[i++ % codes.size()]));
  }
}
BENCHMARK(BM_DecodeRoundtrip)->Arg(4)->Arg(8);

static void BM_Numeral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(num(static_cast<uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_Numeral)->Arg(64)->Arg(1024);
