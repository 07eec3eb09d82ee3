#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "intrans/game.hpp"
#include "intrans/metrics.hpp"

namespace intrans {

/// Full seeded record of one series of round robins, raw per-instance data
/// plus every derived metric series.
///
/// Conventions for instance k (0-based):
///   - scores[k] are the points of round k, played from ratings[k];
///   - ratings has n_instances + 1 entries, ratings[k + 1] being the rating
///     after round k;
///   - running_gp[k] is the per-player mean score through instance k
///     (over retained instances only once the transient window has passed);
///   - crd pairs scores[k] with the post-round ratings[k + 1] and with
///     running_gp[k];
///   - ptm windows pair score triples with the ratings entering those rounds.
struct TournamentHistory {
  GameConfig config;

  std::vector<RatingVector> ratings;           // rt(0) .. rt(n_instances)
  std::vector<MatchMatrix> matches;            // one per instance
  std::vector<ScoreVector> scores;             // sc(k)
  std::vector<std::vector<double>> running_gp; // per-instance per-player

  std::vector<double> itx_series;       // cyclic-triad count per instance
  std::vector<double> kld_series;       // prediction divergence per instance
  std::vector<double> crd_sc_rt_series;
  std::vector<double> crd_sc_gp_series;
  std::vector<RankVector> rank_sc;      // rank of sc(k)
  std::vector<RankVector> rank_rt;      // rank of rt(k+1)
  std::vector<RankVector> rank_gp;      // rank of running_gp[k]

  std::vector<double> gp;               // final per-player mean over retained instances
  double ptm_sc_rt = 0.0;               // over retained windows; NaN when < 3 retained
  double ptm_sc_gp = 0.0;

  int n_instances() const { return static_cast<int>(scores.size()); }
  int retained_begin() const { return config.discard_transient; }
  /// The post-transient slice of a per-instance series.
  std::span<const double> retained(const std::vector<double>& series) const {
    return std::span<const double>(series).subspan(retained_begin());
  }
};

/// Runs the full series for one configuration: resolve round, score, update
/// ratings, then derive every metric series. Fully determined by the config
/// (including its seed).
TournamentHistory run_time_series(const GameConfig& config);

/// Replays fixed outcome matrices instead of resolving games: every player
/// starts at exactly config.initial_rating (no perturbation) and the supplied
/// matrices become the rounds. Drives the built-in worked example and golden
/// tests.
TournamentHistory replay_matches(const GameConfig& config, std::vector<MatchMatrix> matches);

/// The built-in five-player worked example: two fixed round robins replayed
/// from a flat 1600 rating start with K = 15.
struct WorkedExample {
  GameConfig config;
  std::vector<MatchMatrix> matches;
};
WorkedExample five_player_example();

/// Per-repetition aggregate metrics of one scatter cell.
inline constexpr std::array<const char*, 9> kScatterMetricNames = {
    "itx_avg",   "itx_norm",  "kld_avg",   "crd_sc_rt", "crd_sc_gp",
    "ptm_sc_rt", "ptm_sc_gp", "max_sc",    "max_gp"};

struct ScatterRow {
  int n_players = 0;
  double p_rand = 0.0;
  int rep = 0;
  std::array<double, 9> metrics{};  // ordered as kScatterMetricNames
};

struct ScatterSummaryRow {
  int n_players = 0;
  double p_rand = 0.0;
  std::array<double, 9> mean{}, ci_lo{}, ci_hi{};
};

struct ScatterReport {
  std::vector<int> n_values;
  std::vector<double> p_values;
  int reps = 0;
  int instances = 0;
  int discard = 0;
  std::uint64_t base_seed = 0;
  std::vector<ScatterRow> rows;             // cell-major (N outer, p inner), rep-minor
  std::vector<ScatterSummaryRow> summary;   // one per cell, same cell order
};

/// Protocol of a scatter study: a grid of (N, p_rand) cells, each run `reps`
/// times with independent derived seeds.
struct ScatterProtocol {
  std::vector<int> n_values{8, 16, 24, 32};
  std::vector<double> p_values{0.01, 0.10, 0.25, 0.50, 0.75};
  int reps = 100;
  int instances = 1000;
  int discard = 200;
  double k_factor = 15.0;
  double initial_rating = 1600.0;
  double initial_spread = 5.0;
  std::uint64_t base_seed = 1;
  int threads = 1;  // worker threads; repetitions are independent work units

  void validate() const;  // throws std::invalid_argument naming the field
};

/// Runs the whole grid. Results are keyed by (cell, repetition) index, so the
/// report is identical regardless of scheduling order or thread count.
ScatterReport run_scatter(const ScatterProtocol& protocol);

/// Reduces one history to the per-repetition aggregates over its retained
/// instances.
std::array<double, 9> aggregate_metrics(const TournamentHistory& history);

/// Normal-approximation confidence interval of the mean:
/// mean +- z * sd / sqrt(n) with the sample standard deviation. Supported
/// levels: 0.90, 0.95, 0.99. Needs at least 2 samples.
std::pair<double, double> confidence_interval(std::span<const double> samples,
                                              double level = 0.99);

/// Documented per-repetition seed derivation: the SplitMix64 finalizer
/// applied twice, folding in first the cell index and then the repetition
/// index, each offset by the 64-bit golden ratio. No repetition shares state
/// with any other.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t cell_index,
                          std::uint64_t rep_index);

}  // namespace intrans
