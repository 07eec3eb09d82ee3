#include "intrans/game.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace intrans {

void GameConfig::validate() const {
  if (n_players < 3) {
    throw std::invalid_argument("n_players must be >= 3, got " + std::to_string(n_players));
  }
  if (!(p_rand >= 0.0 && p_rand <= 1.0)) {
    throw std::invalid_argument("p_rand must lie in [0, 1], got " + std::to_string(p_rand));
  }
  if (!(k_factor > 0.0) || !std::isfinite(k_factor)) {
    throw std::invalid_argument("k_factor must be positive, got " + std::to_string(k_factor));
  }
  if (!std::isfinite(initial_rating)) {
    throw std::invalid_argument("initial_rating must be finite");
  }
  if (!(initial_spread >= 0.0) || !std::isfinite(initial_spread)) {
    throw std::invalid_argument("initial_spread must be nonnegative, got " +
                                std::to_string(initial_spread));
  }
  if (n_instances < 1) {
    throw std::invalid_argument("n_instances must be >= 1, got " + std::to_string(n_instances));
  }
  if (discard_transient < 0 || discard_transient >= n_instances) {
    throw std::invalid_argument("discard_transient must lie in [0, n_instances), got " +
                                std::to_string(discard_transient));
  }
}

MatchMatrix::MatchMatrix(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("MatchMatrix needs n >= 2, got " + std::to_string(n));
  w_.assign(static_cast<std::size_t>(n) * n, 0);
}

void MatchMatrix::set_winner(int winner, int loser) {
  w_[static_cast<std::size_t>(winner) * n_ + loser] = 1;
  w_[static_cast<std::size_t>(loser) * n_ + winner] = 0;
}

MatchMatrix MatchMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  MatchMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("MatchMatrix::from_rows: row " + std::to_string(i) +
                                  " has wrong length");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rows[i][j] == 1) m.w_[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  m.validate();
  return m;
}

void MatchMatrix::validate() const {
  for (int i = 0; i < n_; ++i) {
    if (won(i, i)) throw std::invalid_argument("MatchMatrix: nonzero diagonal");
    for (int j = i + 1; j < n_; ++j) {
      if (won(i, j) == won(j, i)) {
        throw std::invalid_argument("MatchMatrix: game (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") violates antisymmetry");
      }
    }
  }
}

std::vector<std::pair<int, int>> schedule_round_robin(int n) {
  if (n < 2) throw std::invalid_argument("round robin needs n >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

MatchMatrix resolve_round(const RatingVector& ratings, double p_rand, Rng& rng) {
  const int n = static_cast<int>(ratings.size());
  if (!(p_rand >= 0.0 && p_rand <= 1.0)) {
    throw std::invalid_argument("p_rand must lie in [0, 1], got " + std::to_string(p_rand));
  }
  for (double r : ratings) {
    if (!std::isfinite(r)) throw std::invalid_argument("resolve_round: non-finite rating");
  }
  MatchMatrix m(n);
  for (const auto& [i, j] : schedule_round_robin(n)) {
    bool i_wins;
    if (rng.bernoulli(p_rand)) {
      i_wins = rng.bernoulli(0.5);  // random game, evenly distributed
    } else if (ratings[i] != ratings[j]) {
      i_wins = ratings[i] > ratings[j];
    } else {
      i_wins = rng.bernoulli(0.5);  // exact rating tie
    }
    if (i_wins) {
      m.set_winner(i, j);
    } else {
      m.set_winner(j, i);
    }
  }
  return m;
}

ScoreVector scores(const MatchMatrix& m) {
  const int n = m.size();
  ScoreVector sc(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && m.won(i, j)) sc[i] += 1.0;
    }
  }
  return sc;
}

RatingVector initial_ratings(const GameConfig& config, Rng& rng) {
  RatingVector rt(config.n_players);
  for (double& r : rt) {
    r = config.initial_rating + rng.uniform(-config.initial_spread, config.initial_spread);
  }
  return rt;
}

}  // namespace intrans
