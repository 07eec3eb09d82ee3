#include "intrans/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "intrans/rating.hpp"

namespace intrans {

namespace {

// Fills every derived series of a history whose raw records (ratings,
// matches, scores) are already in place.
void finalize_history(TournamentHistory& h) {
  const int n = h.config.n_players;
  const int instances = static_cast<int>(h.scores.size());
  const int discard = h.config.discard_transient;

  h.itx_series.resize(instances);
  h.kld_series.resize(instances);
  h.crd_sc_rt_series.resize(instances);
  h.crd_sc_gp_series.resize(instances);
  h.rank_sc.resize(instances);
  h.rank_rt.resize(instances);
  h.rank_gp.resize(instances);
  h.running_gp.assign(instances, std::vector<double>(n, 0.0));

  std::vector<double> sum(n, 0.0);
  int summed = 0;
  for (int k = 0; k < instances; ++k) {
    if (k == discard) {  // the retained window starts fresh
      std::fill(sum.begin(), sum.end(), 0.0);
      summed = 0;
    }
    for (int i = 0; i < n; ++i) sum[i] += h.scores[k][i];
    ++summed;
    for (int i = 0; i < n; ++i) h.running_gp[k][i] = sum[i] / summed;

    h.itx_series[k] = static_cast<double>(itx(h.matches[k]));
    h.kld_series[k] = kld(h.matches[k], h.ratings[k]);
    h.crd_sc_rt_series[k] = crd(h.scores[k], h.ratings[k + 1]);
    h.crd_sc_gp_series[k] = crd(h.scores[k], h.running_gp[k]);
    h.rank_sc[k] = rank_with_ties(h.scores[k]);
    h.rank_rt[k] = rank_with_ties(h.ratings[k + 1]);
    h.rank_gp[k] = rank_with_ties(h.running_gp[k]);
  }

  h.gp = h.running_gp.back();  // mean over all retained instances

  // ptm over the retained window: per-player score series against the
  // ratings entering each round, and against the running gp.
  const int retained = instances - discard;
  if (retained >= 3) {
    std::vector<std::vector<double>> sub(n, std::vector<double>(retained));
    std::vector<std::vector<double>> obj_rt(n, std::vector<double>(retained));
    std::vector<std::vector<double>> obj_gp(n, std::vector<double>(retained));
    for (int k = 0; k < retained; ++k) {
      for (int i = 0; i < n; ++i) {
        sub[i][k] = h.scores[discard + k][i];
        obj_rt[i][k] = h.ratings[discard + k][i];
        obj_gp[i][k] = h.running_gp[discard + k][i];
      }
    }
    h.ptm_sc_rt = ptm(sub, obj_rt);
    h.ptm_sc_gp = ptm(sub, obj_gp);
  } else {
    h.ptm_sc_rt = std::numeric_limits<double>::quiet_NaN();
    h.ptm_sc_gp = std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

TournamentHistory run_time_series(const GameConfig& config) {
  config.validate();
  TournamentHistory h;
  h.config = config;

  Rng rng(config.rng_seed);
  h.ratings.reserve(config.n_instances + 1);
  h.ratings.push_back(initial_ratings(config, rng));
  h.matches.reserve(config.n_instances);
  h.scores.reserve(config.n_instances);

  for (int k = 0; k < config.n_instances; ++k) {
    h.matches.push_back(resolve_round(h.ratings.back(), config.p_rand, rng));
    h.scores.push_back(scores(h.matches.back()));
    h.ratings.push_back(elo_update(h.ratings.back(), h.scores.back(), config.k_factor));
  }

  finalize_history(h);
  return h;
}

TournamentHistory replay_matches(const GameConfig& config, std::vector<MatchMatrix> matches) {
  config.validate();
  if (static_cast<int>(matches.size()) != config.n_instances) {
    throw std::invalid_argument("replay_matches: expected " + std::to_string(config.n_instances) +
                                " matrices, got " + std::to_string(matches.size()));
  }
  TournamentHistory h;
  h.config = config;
  h.ratings.push_back(RatingVector(config.n_players, config.initial_rating));
  for (MatchMatrix& m : matches) {
    if (m.size() != config.n_players) {
      throw std::invalid_argument("replay_matches: matrix size does not match n_players");
    }
    m.validate();
    h.matches.push_back(std::move(m));
    h.scores.push_back(scores(h.matches.back()));
    h.ratings.push_back(elo_update(h.ratings.back(), h.scores.back(), config.k_factor));
  }
  finalize_history(h);
  return h;
}

WorkedExample five_player_example() {
  WorkedExample ex;
  ex.config.n_players = 5;
  ex.config.p_rand = 0.0;  // unused by the replay
  ex.config.k_factor = 15.0;
  ex.config.initial_rating = 1600.0;
  ex.config.initial_spread = 0.0;
  ex.config.n_instances = 2;
  ex.config.discard_transient = 0;

  // Round 0: player 1 wins all, players 2-4 cycle, player 5 loses all.
  ex.matches.push_back(MatchMatrix::from_rows({
      {0, 1, 1, 1, 1},
      {0, 0, 1, 0, 1},
      {0, 0, 0, 1, 1},
      {0, 1, 0, 0, 1},
      {0, 0, 0, 0, 0},
  }));
  // Round 1: two cycles, players {1,2,5} and {2,4,5}.
  ex.matches.push_back(MatchMatrix::from_rows({
      {0, 0, 1, 1, 1},
      {1, 0, 1, 1, 0},
      {0, 0, 0, 0, 0},
      {0, 0, 1, 0, 1},
      {0, 1, 1, 0, 0},
  }));
  return ex;
}

void ScatterProtocol::validate() const {
  if (n_values.empty()) throw std::invalid_argument("n_values must be nonempty");
  for (int n : n_values) {
    if (n < 3) throw std::invalid_argument("n_values entries must be >= 3, got " + std::to_string(n));
  }
  if (p_values.empty()) throw std::invalid_argument("p_values must be nonempty");
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("p_values entries must lie in [0, 1], got " + std::to_string(p));
    }
  }
  if (reps < 2) throw std::invalid_argument("reps must be >= 2, got " + std::to_string(reps));
  if (instances <= discard) {
    throw std::invalid_argument("n_instances must exceed discard_transient");
  }
  if (instances - discard < 3) {
    throw std::invalid_argument("need at least 3 retained instances for the windowed metrics");
  }
  if (discard < 0) throw std::invalid_argument("discard_transient must be nonnegative");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (!(k_factor > 0.0)) throw std::invalid_argument("k_factor must be positive");
  if (!(initial_spread >= 0.0)) throw std::invalid_argument("initial_spread must be nonnegative");
}

std::array<double, 9> aggregate_metrics(const TournamentHistory& h) {
  const int n = h.config.n_players;
  std::array<double, 9> m{};
  m[0] = time_average(h.retained(h.itx_series));
  m[1] = m[0] / static_cast<double>(itx_max(n));
  m[2] = time_average(h.retained(h.kld_series));
  m[3] = time_average(h.retained(h.crd_sc_rt_series));
  m[4] = time_average(h.retained(h.crd_sc_gp_series));
  m[5] = h.ptm_sc_rt;
  m[6] = h.ptm_sc_gp;

  double max_sc_sum = 0.0;
  int counted = 0;
  for (int k = h.retained_begin(); k < h.n_instances(); ++k) {
    max_sc_sum += *std::max_element(h.scores[k].begin(), h.scores[k].end());
    ++counted;
  }
  m[7] = max_sc_sum / counted;
  m[8] = *std::max_element(h.gp.begin(), h.gp.end());
  return m;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t cell_index,
                          std::uint64_t rep_index) {
  constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;
  std::uint64_t x = base_seed;
  x = splitmix64(x + golden * (cell_index + 1));
  x = splitmix64(x + golden * (rep_index + 1));
  return x;
}

namespace {

// Runs fn(0..count-1) on `threads` workers pulling from a shared counter.
// Callers write results into preallocated slots, so ordering cannot matter.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const int workers = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          failed.store(true);
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failed.load()) throw std::runtime_error("run_scatter: a repetition failed");
}

}  // namespace

ScatterReport run_scatter(const ScatterProtocol& protocol) {
  protocol.validate();

  ScatterReport report;
  report.n_values = protocol.n_values;
  report.p_values = protocol.p_values;
  report.reps = protocol.reps;
  report.instances = protocol.instances;
  report.discard = protocol.discard;
  report.base_seed = protocol.base_seed;

  const std::size_t cells = protocol.n_values.size() * protocol.p_values.size();
  const std::size_t total = cells * static_cast<std::size_t>(protocol.reps);
  report.rows.resize(total);

  parallel_for(total, protocol.threads, [&](std::size_t task) {
    const std::size_t cell = task / protocol.reps;
    const int rep = static_cast<int>(task % protocol.reps);
    const int n = protocol.n_values[cell / protocol.p_values.size()];
    const double p = protocol.p_values[cell % protocol.p_values.size()];

    GameConfig config;
    config.n_players = n;
    config.p_rand = p;
    config.k_factor = protocol.k_factor;
    config.initial_rating = protocol.initial_rating;
    config.initial_spread = protocol.initial_spread;
    config.n_instances = protocol.instances;
    config.discard_transient = protocol.discard;
    config.rng_seed = derive_seed(protocol.base_seed, cell, rep);

    ScatterRow& row = report.rows[task];
    row.n_players = n;
    row.p_rand = p;
    row.rep = rep;
    row.metrics = aggregate_metrics(run_time_series(config));
  });

  report.summary.reserve(cells);
  std::vector<double> samples(protocol.reps);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    ScatterSummaryRow s;
    s.n_players = protocol.n_values[cell / protocol.p_values.size()];
    s.p_rand = protocol.p_values[cell % protocol.p_values.size()];
    for (std::size_t metric = 0; metric < kScatterMetricNames.size(); ++metric) {
      for (int rep = 0; rep < protocol.reps; ++rep) {
        samples[rep] = report.rows[cell * protocol.reps + rep].metrics[metric];
      }
      s.mean[metric] = time_average(samples);
      const auto [lo, hi] = confidence_interval(samples, 0.99);
      s.ci_lo[metric] = lo;
      s.ci_hi[metric] = hi;
    }
    report.summary.push_back(s);
  }
  return report;
}

std::pair<double, double> confidence_interval(std::span<const double> samples, double level) {
  if (samples.size() < 2) {
    throw std::invalid_argument("confidence_interval needs at least 2 samples");
  }
  double z = 0.0;
  if (level == 0.99) {
    z = 2.576;
  } else if (level == 0.95) {
    z = 1.96;
  } else if (level == 0.90) {
    z = 1.645;
  } else {
    throw std::invalid_argument("confidence_interval: unsupported level " + std::to_string(level));
  }
  const double mean = time_average(samples);
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  const double half_width = z * sd / std::sqrt(static_cast<double>(samples.size()));
  return {mean - half_width, mean + half_width};
}

}  // namespace intrans
