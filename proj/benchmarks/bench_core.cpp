#include <benchmark/benchmark.h>

#include "intrans/experiments.hpp"
#include "intrans/metrics.hpp"
#include "intrans/rating.hpp"

using namespace intrans;

namespace {

RatingVector spread_ratings(int n, Rng& rng) {
  RatingVector rt(n);
  for (double& r : rt) r = rng.uniform(1500.0, 1700.0);
  return rt;
}

void BM_resolve_round(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const RatingVector rt = spread_ratings(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolve_round(rt, 0.5, rng));
  }
  state.SetItemsProcessed(state.iterations() * n * (n - 1) / 2);
}

void BM_itx(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const MatchMatrix m = resolve_round(spread_ratings(n, rng), 1.0, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(itx(m));
  }
  state.SetItemsProcessed(state.iterations() * itx_max(n));
}

void BM_expected_outcome(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const RatingVector rt = spread_ratings(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_outcome(rt));
  }
}

void BM_rank_with_ties(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  std::vector<double> values(n);
  for (double& v : values) v = static_cast<double>(rng.below(8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_with_ties(values));
  }
}

void BM_run_time_series(benchmark::State& state) {
  GameConfig config;
  config.n_players = static_cast<int>(state.range(0));
  config.p_rand = 0.5;
  config.n_instances = 1000;
  config.discard_transient = 200;
  config.rng_seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_time_series(config));
  }
}

BENCHMARK(BM_resolve_round)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_itx)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_expected_outcome)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_rank_with_ties)->Arg(16)->Arg(64);
BENCHMARK(BM_run_time_series)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
