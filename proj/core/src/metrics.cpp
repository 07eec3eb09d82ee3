#include "intrans/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "intrans/rating.hpp"

namespace intrans {

std::int64_t itx_max(int n) {
  if (n < 3) throw std::invalid_argument("itx_max needs n >= 3, got " + std::to_string(n));
  const std::int64_t nn = n;
  return (nn - 2) * (nn - 1) * nn / 6;
}

std::int64_t itx(const MatchMatrix& m) {
  const int n = m.size();
  std::int64_t count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool ij = m.won(i, j);
      for (int k = j + 1; k < n; ++k) {
        // A triple cycles iff the three same-orientation edges agree:
        // i->j->k->i when all true, i->k->j->i when all false.
        if (ij == m.won(j, k) && ij == m.won(k, i)) ++count;
      }
    }
  }
  return count;
}

std::int64_t itx_from_scores(const ScoreVector& sc) {
  const int n = static_cast<int>(sc.size());
  if (n < 3) throw std::invalid_argument("itx_from_scores needs n >= 3");
  std::vector<std::int64_t> wins;
  wins.reserve(n);
  std::int64_t pairs_beaten = 0;  // sum of C(sc_i, 2)
  for (double s : sc) {
    const double rounded = std::round(s);
    if (!(std::abs(s - rounded) < 1e-9) || rounded < 0.0 || rounded > n - 1) {
      throw std::invalid_argument("itx_from_scores: score " + std::to_string(s) +
                                  " is not a valid round-robin win count");
    }
    const std::int64_t w = static_cast<std::int64_t>(rounded);
    wins.push_back(w);
    pairs_beaten += w * (w - 1) / 2;
  }
  // A sequence is realizable by some tournament iff every ascending partial
  // sum is at least C(k, 2), with equality at k = n (Landau's condition).
  std::sort(wins.begin(), wins.end());
  std::int64_t partial = 0;
  for (int k = 1; k <= n; ++k) {
    partial += wins[k - 1];
    const std::int64_t games_among_k = static_cast<std::int64_t>(k) * (k - 1) / 2;
    if (partial < games_among_k || (k == n && partial != games_among_k)) {
      throw std::invalid_argument("itx_from_scores: no round robin produces these scores");
    }
  }
  return itx_max(n) - pairs_beaten;
}

double kld(const MatchMatrix& m, const RatingVector& pre_ratings) {
  const int n = m.size();
  if (static_cast<int>(pre_ratings.size()) != n) {
    throw std::invalid_argument("kld: rating length does not match matrix size");
  }
  constexpr double eps = 1e-12;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double p = win_probability(pre_ratings[i], pre_ratings[j]);
      p = std::clamp(p, eps, 1.0 - eps);
      sum += m.won(i, j) ? -std::log(p) : -std::log(1.0 - p);
    }
  }
  return sum / (static_cast<double>(n) * (n - 1) / 2.0);
}

std::vector<double> generalization_performance(const std::vector<ScoreVector>& score_history) {
  if (score_history.empty()) {
    throw std::invalid_argument("generalization_performance: empty score history");
  }
  const std::size_t n = score_history.front().size();
  std::vector<double> gp(n, 0.0);
  for (const ScoreVector& sc : score_history) {
    if (sc.size() != n) {
      throw std::invalid_argument("generalization_performance: inconsistent player counts");
    }
    for (std::size_t i = 0; i < n; ++i) gp[i] += sc[i];
  }
  for (double& g : gp) g /= static_cast<double>(score_history.size());
  return gp;
}

RankVector rank_with_ties(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  RankVector ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) hold one tie group; each member gets the mean
    // of the 1-based positions, which keeps the rank sum at n(n+1)/2.
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double crd(std::span<const double> subjective, std::span<const double> objective) {
  const std::size_t n = subjective.size();
  if (objective.size() != n) {
    throw std::invalid_argument("crd: vectors have lengths " + std::to_string(n) + " and " +
                                std::to_string(objective.size()));
  }
  if (n < 2) throw std::invalid_argument("crd needs at least 2 players");
  const RankVector sub = rank_with_ties(subjective);
  const RankVector obj = rank_with_ties(objective);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += std::abs(sub[i] - obj[i]);
  const auto max_displacement = static_cast<double>((n * n) / 2);
  return total / max_displacement;
}

double ptm(const std::vector<std::vector<double>>& subjective_series,
           const std::vector<std::vector<double>>& objective_series, int window) {
  if (window < 2) throw std::invalid_argument("ptm: window must be >= 2");
  const std::size_t players = subjective_series.size();
  if (players == 0 || objective_series.size() != players) {
    throw std::invalid_argument("ptm: series must cover the same nonempty player set");
  }
  const std::size_t t = subjective_series.front().size();
  if (t < static_cast<std::size_t>(window)) {
    throw std::invalid_argument("ptm: series length " + std::to_string(t) +
                                " is shorter than the window " + std::to_string(window));
  }
  for (std::size_t p = 0; p < players; ++p) {
    if (subjective_series[p].size() != t || objective_series[p].size() != t) {
      throw std::invalid_argument("ptm: ragged series");
    }
  }

  const std::size_t windows_per_player = t - window + 1;
  std::size_t mismatches = 0;
  for (std::size_t p = 0; p < players; ++p) {
    for (std::size_t k = 0; k < windows_per_player; ++k) {
      const std::span<const double> sub(subjective_series[p].data() + k,
                                        static_cast<std::size_t>(window));
      const std::span<const double> obj(objective_series[p].data() + k,
                                        static_cast<std::size_t>(window));
      if (rank_with_ties(sub) != rank_with_ties(obj)) ++mismatches;
    }
  }
  return static_cast<double>(mismatches) / (static_cast<double>(players) * windows_per_player);
}

double time_average(std::span<const double> series) {
  if (series.empty()) throw std::invalid_argument("time_average: empty series");
  return std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(series.size());
}

}  // namespace intrans
