#pragma once

#include "intrans/game.hpp"

namespace intrans {

/// Expected game points per player for one round robin (sum of pairwise win
/// probabilities against every opponent).
using ExpectationVector = std::vector<double>;

/// Elo single-game win probability of the first player:
/// 1 / (1 + 10^((rating_j - rating_i) / 400)).
double win_probability(double rating_i, double rating_j);

/// Expected round-robin outcome: ex_i = sum over all opponents j != i of
/// win_probability(rt_i, rt_j).
ExpectationVector expected_outcome(const RatingVector& ratings);

/// K-factor rating update: rt_i' = rt_i + k * (sc_i - ex_i). The rating sum
/// is conserved because scores and expectations both total n(n-1)/2.
RatingVector elo_update(const RatingVector& ratings, const ScoreVector& scores, double k_factor);

}  // namespace intrans
