#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "intrans/rng.hpp"

namespace intrans {

/// A point of the one-dimensional, real-valued search space.
using SearchPoint = double;

/// The candidate solutions present at one generation.
struct Population {
  std::vector<SearchPoint> members;
  int generation = 0;
};

/// A sample of evaluators drawn without replacement from an evaluator pool.
struct EvaluatorSample {
  std::vector<SearchPoint> evaluators;
  std::size_t mu = 0;      // sample size
  std::size_t lambda = 0;  // pool size the sample was drawn from
};

enum class LandscapeKind {
  identity,  // f(s) = s
  sphere,    // f(s) = -s^2
  gaussian,  // f(s) = exp(-(s - center)^2 / (2 width^2))
};

/// A one-dimensional objective fitness function over an interval domain.
/// The neighborhood radius is a descriptor carried with the landscape; it
/// drives no dynamics here.
struct ObjectiveLandscape {
  LandscapeKind kind = LandscapeKind::identity;
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();
  double gaussian_center = 0.0;
  double gaussian_width = 1.0;
  double neighborhood_radius = 0.0;
};

/// Parses a landscape name ("identity", "sphere", "gaussian").
/// Throws std::invalid_argument on unknown names.
LandscapeKind parse_landscape(std::string_view name);
std::string_view landscape_name(LandscapeKind kind);

/// Evaluates the landscape at s. Throws std::domain_error when s lies outside
/// the configured domain.
double objective_fitness(const ObjectiveLandscape& landscape, SearchPoint s);

/// Uniform sample of mu evaluators without replacement; a fresh independent
/// draw on every call. Requires 1 <= mu <= pool size.
EvaluatorSample sample_evaluators(const std::vector<SearchPoint>& pool, std::size_t mu, Rng& rng);

/// The evaluator pool a player is judged against: the whole population, minus
/// the player's own entry unless include_self is set.
std::vector<SearchPoint> evaluator_pool(const Population& population, std::size_t player,
                                        bool include_self);

/// Interaction-derived subjective fitness: the fraction of sampled evaluators
/// whose objective fitness is strictly below that of s.
double subjective_fitness(const ObjectiveLandscape& landscape, SearchPoint s,
                          const EvaluatorSample& sample);

}  // namespace intrans
