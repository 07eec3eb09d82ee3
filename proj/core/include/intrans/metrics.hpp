#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "intrans/game.hpp"

namespace intrans {

/// Tied-rank ranking of a value vector: rank 1 is best (largest value), ties
/// receive the arithmetic mean of the rank positions they span, so the rank
/// sum is always n(n+1)/2.
using RankVector = std::vector<double>;

/// Maximum possible number of cyclic triads among n players: C(n, 3).
/// n must be >= 3.
std::int64_t itx_max(int n);

/// Intransitivity index: the number of unordered player triples whose
/// restriction of the outcome matrix is a cycle (each of the three wins
/// exactly one game against the other two). Exhaustive triple enumeration.
std::int64_t itx(const MatchMatrix& m);

/// Independent route to the same count via the score identity
/// itx = C(n, 3) - sum_i C(sc_i, 2). Requires integral round-robin scores
/// summing to n(n-1)/2; throws std::invalid_argument otherwise.
std::int64_t itx_from_scores(const ScoreVector& sc);

/// Mean per-game Kullback-Leibler divergence between the rating-based
/// prediction and the actual binary outcome: for each game (i, j) the term is
/// -ln p if i won and -ln(1 - p) if j won, with p = win_probability(rt_i, rt_j)
/// clamped to [1e-12, 1 - 1e-12]. pre_ratings are the ratings that entered
/// the round.
double kld(const MatchMatrix& m, const RatingVector& pre_ratings);

/// Per-player mean score over a series of round-robin instances.
std::vector<double> generalization_performance(const std::vector<ScoreVector>& score_history);

/// Average-rank ranking, higher value = better rank (rank 1).
RankVector rank_with_ties(std::span<const double> values);

/// Collective ranking difference: total absolute difference between the
/// tied-rank vectors of the two fitness vectors, normalized by floor(n^2 / 2)
/// (the largest total displacement any two rankings of n items can reach).
double crd(std::span<const double> subjective, std::span<const double> objective);

/// Player-wise temporal mismatch: fraction of per-player sliding windows of
/// `window` consecutive instances whose subjective tied-rank vector differs
/// from the objective one. Series are indexed [player][instance]; all series
/// must share one length T >= window. Normalized by n_players * (T - window + 1).
double ptm(const std::vector<std::vector<double>>& subjective_series,
           const std::vector<std::vector<double>>& objective_series, int window = 3);

/// Arithmetic mean of a nonempty series.
double time_average(std::span<const double> series);

}  // namespace intrans
