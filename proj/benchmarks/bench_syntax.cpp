#include <benchmark/benchmark.h>

#include "truthlab/derivations.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/suite.hpp"
#include "truthlab/syntax.hpp"

using namespace truthlab;

static void BM_ParsePrintRound(benchmark::State& state) {
  Rng rng(1);
  std::vector<std::string> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(to_string(gen::random_formula(rng, 8, 3)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_formula(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_ParsePrintRound);

static void BM_InternSharedChain(benchmark::State& state) {
  // interning a sentence whose subterms already exist is a lookup chain
  Formula base = parse_formula("E x0.((x0+x1)=S(S(0)))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(disj(base, neg(base)));
  }
}
BENCHMARK(BM_InternSharedChain);

static void BM_YabloTransform(benchmark::State& state) {
  SentenceSeq chain(state.range(0), parse_formula("0=0"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(yablo_transform(chain));
  }
}
BENCHMARK(BM_YabloTransform)->Arg(16)->Arg(64)->Arg(256);
