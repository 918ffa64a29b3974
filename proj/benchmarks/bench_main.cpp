#include <benchmark/benchmark.h>

#include "dp4/charts.hpp"
#include "dp4/classifier.hpp"
#include "dp4/ff_counter.hpp"
#include "dp4/poincare.hpp"
#include "dp4/prime_field.hpp"
#include "dp4/rng.hpp"
#include "dp4/suites.hpp"

using namespace dp4;

namespace {

void BM_ChartElimination(benchmark::State& state) {
  const ChartModel& ch = state.range(0) == 3 ? chart_x3() : chart_x4();
  for (auto _ : state) {
    auto r = verify_chart_elimination(ch, true);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ChartElimination)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LemmaGram(benchmark::State& state) {
  const ChartModel& ch = chart_x3();
  for (auto _ : state) {
    auto r = verify_lemma_gram(ch);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_LemmaGram)->Unit(benchmark::kMillisecond);

void BM_ClassifyLineRat(benchmark::State& state) {
  Rng rng(0xbe7c4);
  std::vector<FlagLine<Rat>> lines;
  for (int i = 0; i < 64; ++i) lines.push_back(random_line_in_y<Rat>(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    auto c = classify_line(lines[i++ % lines.size()]);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ClassifyLineRat)->Unit(benchmark::kMicrosecond);

void BM_ClassifyLineF7(benchmark::State& state) {
  with_prime(7, [&]<class F>() {
    Rng rng(0xbe7c4);
    std::vector<FlagLine<F>> lines;
    for (int i = 0; i < 64; ++i) lines.push_back(random_line_in_y<F>(rng));
    std::size_t i = 0;
    for (auto _ : state) {
      auto c = classify_line(lines[i++ % lines.size()]);
      benchmark::DoNotOptimize(c);
    }
  });
}
BENCHMARK(BM_ClassifyLineF7)->Unit(benchmark::kMicrosecond);

void BM_CountPoints(benchmark::State& state) {
  auto id = static_cast<VarietyId>(state.range(0));
  auto q = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    auto r = count_points(id, q, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CountPoints)
    ->Args({static_cast<long>(VarietyId::Dbar), 3})
    ->Args({static_cast<long>(VarietyId::Dbar), 5})
    ->Args({static_cast<long>(VarietyId::DY), 7})
    ->Unit(benchmark::kMillisecond);

void BM_StableMapsChain(benchmark::State& state) {
  auto referee = expected_count_poly(VarietyId::DY);
  auto target = moduli_target_coeffs();
  for (auto _ : state) {
    auto r = ip_stable_maps_chain(referee, target);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_StableMapsChain)->Unit(benchmark::kMicrosecond);

void BM_VerifySuite(benchmark::State& state) {
  RunConfig cfg;
  cfg.seed = 42;
  cfg.random_samples = 25;
  cfg.suites = {all_suite_ids()[static_cast<std::size_t>(state.range(0))]};
  cfg.jobs = 1;
  for (auto _ : state) {
    auto r = run_verification(cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifySuite)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
