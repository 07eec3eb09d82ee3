#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "intrans/rng.hpp"

namespace intrans {

/// Elo-style ratings, one entry per player (unitless rating points).
using RatingVector = std::vector<double>;
/// Round-robin game points, one entry per player. Integral values (a win is
/// one point, a loss zero) kept as doubles so score vectors feed directly
/// into the rank/mean machinery.
using ScoreVector = std::vector<double>;

/// All tunables of the simple random game.
struct GameConfig {
  int n_players = 6;
  double p_rand = 0.5;             // fraction of games with a random result
  double k_factor = 15.0;          // rating update sensitivity
  double initial_rating = 1600.0;
  double initial_spread = 5.0;     // half-width of the uniform perturbation of rt(0)
  int n_instances = 20;            // number of round robins in a series
  int discard_transient = 0;       // leading instances excluded from aggregates
  std::uint64_t rng_seed = 1;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  bool operator==(const GameConfig&) const = default;
};

/// One round robin's binary outcome record: won(i, j) is true iff player i
/// beat player j. No draws; the diagonal is unused and always zero.
class MatchMatrix {
 public:
  explicit MatchMatrix(int n);

  int size() const { return n_; }
  bool won(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j] != 0; }

  /// Records a decided game (sets both orientations).
  void set_winner(int winner, int loser);

  /// Builds a matrix from explicit 0/1 rows; the diagonal is ignored.
  /// Validates the result.
  static MatchMatrix from_rows(const std::vector<std::vector<int>>& rows);

  /// Checks antisymmetry (w[i][j] + w[j][i] == 1 for i != j) and the empty
  /// diagonal; throws std::invalid_argument on violation.
  void validate() const;

  bool operator==(const MatchMatrix& other) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> w_;
};

/// All unordered pairings {i, j}, i < j, of a single round robin, in
/// lexicographic order. n must be >= 2.
std::vector<std::pair<int, int>> schedule_round_robin(int n);

/// Plays one round robin. Each game is independently random with probability
/// p_rand (winner then a fair coin flip); otherwise the strictly higher-rated
/// player wins, with an exact rating tie resolved by a fair coin flip.
MatchMatrix resolve_round(const RatingVector& ratings, double p_rand, Rng& rng);

/// Per-player game points of one round robin: sc_i = number of wins of i.
ScoreVector scores(const MatchMatrix& m);

/// Starting ratings: initial_rating plus an independent uniform perturbation
/// on [-initial_spread, +initial_spread] per player.
RatingVector initial_ratings(const GameConfig& config, Rng& rng);

}  // namespace intrans
