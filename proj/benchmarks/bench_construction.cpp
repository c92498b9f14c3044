#include <benchmark/benchmark.h>

#include "truthlab/cutmodel.hpp"
#include "truthlab/rng.hpp"
#include "truthlab/satclass.hpp"
#include "truthlab/suite.hpp"

using namespace truthlab;

static void BM_TemplateExtraction(benchmark::State& state) {
  Rng rng(6);
  std::vector<Formula> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(gen::random_formula(rng, 6, 3));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_template(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_TemplateExtraction);

static void BM_BuildSatClass(benchmark::State& state) {
  Rng rng(7);
  std::vector<SatScenario> scenarios;
  for (int i = 0; i < 8; ++i) scenarios.push_back(gen::random_scenario(rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_sat_class(scenarios[i++ % scenarios.size()]));
  }
}
BENCHMARK(BM_BuildSatClass);

static void BM_CutConstructionA(benchmark::State& state) {
  Rng rng(8);
  CutModel m = gen::random_cut_model(rng, 2000, 1000,
                                     static_cast<size_t>(state.range(0)), 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_a(m));
  }
}
BENCHMARK(BM_CutConstructionA)->Arg(100)->Arg(300);
