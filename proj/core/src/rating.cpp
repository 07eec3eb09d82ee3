#include "intrans/rating.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace intrans {

double win_probability(double rating_i, double rating_j) {
  return 1.0 / (1.0 + std::pow(10.0, (rating_j - rating_i) / 400.0));
}

ExpectationVector expected_outcome(const RatingVector& ratings) {
  const std::size_t n = ratings.size();
  if (n < 2) throw std::invalid_argument("expected_outcome needs at least 2 players");
  ExpectationVector ex(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) ex[i] += win_probability(ratings[i], ratings[j]);
    }
  }
  return ex;
}

RatingVector elo_update(const RatingVector& ratings, const ScoreVector& scores, double k_factor) {
  if (ratings.size() != scores.size()) {
    throw std::invalid_argument("elo_update: ratings have length " +
                                std::to_string(ratings.size()) + " but scores have length " +
                                std::to_string(scores.size()));
  }
  if (!(k_factor > 0.0)) {
    throw std::invalid_argument("elo_update: k_factor must be positive");
  }
  const ExpectationVector ex = expected_outcome(ratings);
  RatingVector next(ratings.size());
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    next[i] = ratings[i] + k_factor * (scores[i] - ex[i]);
  }
  return next;
}

}  // namespace intrans
