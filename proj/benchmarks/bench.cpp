#include <doxa/belief.hpp>
#include <doxa/corpus.hpp>
#include <doxa/dsl.hpp>
#include <doxa/generator.hpp>
#include <doxa/principles.hpp>
#include <doxa/properties.hpp>

#include <benchmark/benchmark.h>

using namespace doxa;

static void BM_BeliefSetHundredFlips(benchmark::State& state) {
  const auto m = corpus::make_hundred_flips();
  for (auto _ : state) benchmark::DoNotOptimize(belief_set(m, m.universe()));
}
BENCHMARK(BM_BeliefSetHundredFlips);

static void BM_LkBeliefSetV2(benchmark::State& state) {
  const auto m = corpus::make_drawing_card_v2();
  for (auto _ : state) benchmark::DoNotOptimize(lk_belief_set(m, m.universe()));
}
BENCHMARK(BM_LkBeliefSetV2);

static void BM_CheckAllFlipping(benchmark::State& state) {
  const auto m = corpus::make_flipping(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_all(m, BeliefOperator::Hpd));
}
BENCHMARK(BM_CheckAllFlipping)->Arg(16)->Arg(30)->Arg(60);

static void BM_CheckAllDrawingCardV2Lk(benchmark::State& state) {
  const auto m = corpus::make_drawing_card_v2();
  for (auto _ : state) benchmark::DoNotOptimize(check_all(m, BeliefOperator::Lk));
}
BENCHMARK(BM_CheckAllDrawingCardV2Lk);

static void BM_StabilityCells(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  StructureSpec spec;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < k; ++i) {
    spec.states.push_back("s" + std::to_string(i + 1));
    spec.weights.push_back(Rational(static_cast<long>(i + 1)));
    spec.cells.push_back({i});
    all.push_back(i);
  }
  spec.evidence = {all, {all.begin(), all.begin() + static_cast<long>(k / 2)}};
  spec.threshold = Rational(9, 10);
  const auto m = validate_structure(spec);
  for (auto _ : state) benchmark::DoNotOptimize(check_stability(m));
}
BENCHMARK(BM_StabilityCells)->Arg(8)->Arg(12)->Arg(16);

static void BM_GenerateAndCheck(benchmark::State& state) {
  GeneratorConfig cfg;
  std::uint64_t i = 0;
  for (auto _ : state) {
    cfg.seed = trial_seed(42, i++);
    const auto m = generate_random(cfg);
    benchmark::DoNotOptimize(check_principle(m, Principle::DiamondMinus, BeliefOperator::Hpd));
  }
}
BENCHMARK(BM_GenerateAndCheck);

static void BM_ParseV2(benchmark::State& state) {
  const auto text = dsl::serialize(corpus::make_drawing_card_v2());
  for (auto _ : state) benchmark::DoNotOptimize(dsl::parse(text));
}
BENCHMARK(BM_ParseV2);
BENCHMARK_MAIN();
