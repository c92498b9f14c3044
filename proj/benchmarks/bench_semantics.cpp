#include <benchmark/benchmark.h>

#include "truthlab/derivations.hpp"
#include "truthlab/disjunctions.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

static void BM_EvaluateSmall(benchmark::State& state) {
  Rng rng(4);
  std::vector<Formula> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(gen::small_value_sentence(rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(pool[i++ % pool.size()], {64}));
  }
}
BENCHMARK(BM_EvaluateSmall);

static void BM_EvaluateQuantifiedOuter(benchmark::State& state) {
  Rng rng(5);
  SentenceSeq seq;
  for (int i = 0; i < state.range(0); ++i)
    seq.push_back(gen::decidable_sentence(rng, false));
  Formula built = quantified_outer(seq);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(built, {64}));
  }
}
BENCHMARK(BM_EvaluateQuantifiedOuter)->Arg(8)->Arg(32);

static void BM_YabloClaimCheck(benchmark::State& state) {
  SentenceSeq chain(state.range(0), parse_formula("0=0"));
  YabloSequence ys = yablo_transform(chain);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_yablo_claim(ys, 64));
  }
}
BENCHMARK(BM_YabloClaimCheck)->Arg(16)->Arg(64);
