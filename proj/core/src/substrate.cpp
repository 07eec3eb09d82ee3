#include "intrans/substrate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace intrans {

LandscapeKind parse_landscape(std::string_view name) {
  if (name == "identity") return LandscapeKind::identity;
  if (name == "sphere") return LandscapeKind::sphere;
  if (name == "gaussian") return LandscapeKind::gaussian;
  throw std::invalid_argument("unknown landscape '" + std::string(name) +
                              "' (expected identity, sphere or gaussian)");
}

std::string_view landscape_name(LandscapeKind kind) {
  switch (kind) {
    case LandscapeKind::identity: return "identity";
    case LandscapeKind::sphere: return "sphere";
    case LandscapeKind::gaussian: return "gaussian";
  }
  return "?";
}

double objective_fitness(const ObjectiveLandscape& landscape, SearchPoint s) {
  if (!std::isfinite(s) || s < landscape.domain_lo || s > landscape.domain_hi) {
    throw std::domain_error("objective_fitness: point " + std::to_string(s) +
                            " outside the configured domain");
  }
  switch (landscape.kind) {
    case LandscapeKind::identity: return s;
    case LandscapeKind::sphere: return -s * s;
    case LandscapeKind::gaussian: {
      const double d = (s - landscape.gaussian_center) / landscape.gaussian_width;
      return std::exp(-0.5 * d * d);
    }
  }
  throw std::logic_error("objective_fitness: unhandled landscape kind");
}

EvaluatorSample sample_evaluators(const std::vector<SearchPoint>& pool, std::size_t mu, Rng& rng) {
  if (mu < 1 || mu > pool.size()) {
    throw std::invalid_argument("sample_evaluators: mu = " + std::to_string(mu) +
                                " not in [1, pool size = " + std::to_string(pool.size()) + "]");
  }
  // Partial Fisher-Yates over an index copy: uniform without replacement.
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  EvaluatorSample sample;
  sample.mu = mu;
  sample.lambda = pool.size();
  sample.evaluators.reserve(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    const std::size_t pick = i + rng.below(idx.size() - i);
    std::swap(idx[i], idx[pick]);
    sample.evaluators.push_back(pool[idx[i]]);
  }
  return sample;
}

std::vector<SearchPoint> evaluator_pool(const Population& population, std::size_t player,
                                        bool include_self) {
  if (player >= population.members.size()) {
    throw std::invalid_argument("evaluator_pool: player index out of range");
  }
  if (include_self) return population.members;
  std::vector<SearchPoint> pool;
  pool.reserve(population.members.size() - 1);
  for (std::size_t i = 0; i < population.members.size(); ++i) {
    if (i != player) pool.push_back(population.members[i]);
  }
  return pool;
}

double subjective_fitness(const ObjectiveLandscape& landscape, SearchPoint s,
                          const EvaluatorSample& sample) {
  if (sample.evaluators.empty() || sample.evaluators.size() != sample.mu) {
    throw std::invalid_argument("subjective_fitness: invalid evaluator sample");
  }
  const double fs = objective_fitness(landscape, s);
  std::size_t wins = 0;
  for (SearchPoint e : sample.evaluators) {
    if (fs > objective_fitness(landscape, e)) ++wins;
  }
  return static_cast<double>(wins) / static_cast<double>(sample.mu);
}

}  // namespace intrans
