#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "intrans/substrate.hpp"

using namespace intrans;

TEST_CASE("objective landscapes evaluate pointwise") {
  ObjectiveLandscape identity;
  CHECK(objective_fitness(identity, 0.7) == 0.7);
  CHECK(objective_fitness(identity, 0.0) == 0.0);

  ObjectiveLandscape sphere;
  sphere.kind = LandscapeKind::sphere;
  CHECK(objective_fitness(sphere, 2.0) == -4.0);
  CHECK(objective_fitness(sphere, 0.0) == 0.0);

  ObjectiveLandscape gaussian;
  gaussian.kind = LandscapeKind::gaussian;
  gaussian.gaussian_center = 1.0;
  CHECK(objective_fitness(gaussian, 1.0) == 1.0);
  CHECK(objective_fitness(gaussian, 2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("points outside the configured domain are rejected") {
  ObjectiveLandscape landscape;
  landscape.domain_lo = 0.0;
  landscape.domain_hi = 1.0;
  CHECK_THROWS_AS(objective_fitness(landscape, 1.5), std::domain_error);
  CHECK_THROWS_AS(objective_fitness(landscape, -0.1), std::domain_error);
  CHECK_NOTHROW(objective_fitness(landscape, 1.0));
}

TEST_CASE("landscape names parse both ways") {
  CHECK(parse_landscape("identity") == LandscapeKind::identity);
  CHECK(parse_landscape("sphere") == LandscapeKind::sphere);
  CHECK(parse_landscape("gaussian") == LandscapeKind::gaussian);
  CHECK(landscape_name(LandscapeKind::sphere) == "sphere");
  CHECK_THROWS_AS(parse_landscape("rastrigin"), std::invalid_argument);
}

TEST_CASE("an exhaustive sample is the whole pool") {
  const std::vector<SearchPoint> pool{0.1, 0.2, 0.3, 0.4};
  Rng rng(5);
  EvaluatorSample sample = sample_evaluators(pool, 4, rng);
  CHECK(sample.mu == 4);
  CHECK(sample.lambda == 4);
  std::sort(sample.evaluators.begin(), sample.evaluators.end());
  CHECK(sample.evaluators == pool);
}

TEST_CASE("sampling validates mu") {
  const std::vector<SearchPoint> pool{0.1, 0.2};
  Rng rng(1);
  CHECK_THROWS_AS(sample_evaluators(pool, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_evaluators(pool, 3, rng), std::invalid_argument);
}

TEST_CASE("single-evaluator samples are uniform over the pool") {
  std::vector<SearchPoint> pool(10);
  for (int i = 0; i < 10; ++i) pool[i] = i;
  Rng rng(9);
  std::vector<int> hits(10, 0);
  const int draws = 100000;
  for (int d = 0; d < draws; ++d) {
    ++hits[static_cast<int>(sample_evaluators(pool, 1, rng).evaluators[0])];
  }
  for (int h : hits) {
    CHECK(std::abs(h / double(draws) - 0.1) < 0.01);
  }
}

TEST_CASE("samples are drawn without replacement") {
  std::vector<SearchPoint> pool(8);
  for (int i = 0; i < 8; ++i) pool[i] = i;
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    EvaluatorSample s = sample_evaluators(pool, 5, rng);
    std::sort(s.evaluators.begin(), s.evaluators.end());
    CHECK(std::adjacent_find(s.evaluators.begin(), s.evaluators.end()) == s.evaluators.end());
  }
}

TEST_CASE("subjective fitness counts strictly dominated evaluators") {
  const ObjectiveLandscape identity;
  EvaluatorSample sample;
  sample.evaluators = {0.2, 0.7};
  sample.mu = 2;
  sample.lambda = 2;
  CHECK(subjective_fitness(identity, 0.5, sample) == 0.5);

  sample.evaluators = {0.1, 0.2, 0.3};
  sample.mu = 3;
  CHECK(subjective_fitness(identity, 0.9, sample) == 1.0);

  sample.evaluators = {0.4, 0.4, 0.4};
  CHECK(subjective_fitness(identity, 0.4, sample) == 0.0);  // strict inequality fails
}

TEST_CASE("subjective fitness lands on the 1/mu grid") {
  const ObjectiveLandscape identity;
  Rng rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t lambda = 2 + rng.below(10);
    std::vector<SearchPoint> pool(lambda);
    for (double& p : pool) p = rng.next_double();
    const std::size_t mu = 1 + rng.below(lambda);
    const EvaluatorSample sample = sample_evaluators(pool, mu, rng);
    const double f = subjective_fitness(identity, rng.next_double(), sample);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    const double scaled = f * static_cast<double>(mu);
    CHECK(std::abs(scaled - std::round(scaled)) < 1e-9);
  }
}

TEST_CASE("subjective fitness is monotone in objective fitness for a fixed sample") {
  const ObjectiveLandscape identity;
  Rng rng(21);
  std::vector<SearchPoint> pool(12);
  for (double& p : pool) p = rng.next_double();
  const EvaluatorSample sample = sample_evaluators(pool, 6, rng);
  for (int trial = 0; trial < 200; ++trial) {
    const double s1 = rng.next_double();
    const double s2 = rng.next_double();
    const double f1 = subjective_fitness(identity, s1, sample);
    const double f2 = subjective_fitness(identity, s2, sample);
    if (s1 >= s2) {
      CHECK(f1 >= f2);
    } else {
      CHECK(f1 <= f2);
    }
  }
}

TEST_CASE("a full self-included sample recovers the ascending rank") {
  Population population;
  population.members = {0.9, 0.1, 0.5, 0.3, 0.7};
  const ObjectiveLandscape identity;
  Rng rng(33);
  // ascending position of each member among distinct values
  const std::vector<int> below{4, 0, 2, 1, 3};
  for (std::size_t i = 0; i < population.members.size(); ++i) {
    const std::vector<SearchPoint> pool = evaluator_pool(population, i, true);
    const EvaluatorSample sample = sample_evaluators(pool, pool.size(), rng);
    const double f = subjective_fitness(identity, population.members[i], sample);
    CHECK(f == doctest::Approx(below[i] / 5.0).epsilon(1e-12));
  }
}

TEST_CASE("excluding self removes exactly the player's entry") {
  Population population;
  population.members = {0.1, 0.2, 0.3};
  CHECK(evaluator_pool(population, 1, false) == std::vector<SearchPoint>{0.1, 0.3});
  CHECK(evaluator_pool(population, 1, true) == population.members);
  CHECK_THROWS_AS(evaluator_pool(population, 3, false), std::invalid_argument);
}

TEST_CASE("mean subjective fitness approaches the dominated fraction") {
  const ObjectiveLandscape identity;
  Rng rng(27);
  std::vector<SearchPoint> pool(20);
  for (double& p : pool) p = rng.next_double();
  const double s = 0.6;
  double expected = 0.0;
  for (double p : pool) {
    if (s > p) expected += 1.0;
  }
  expected /= pool.size();

  double total = 0.0;
  const int draws = 10000;
  for (int d = 0; d < draws; ++d) {
    total += subjective_fitness(identity, s, sample_evaluators(pool, 5, rng));
  }
  CHECK(std::abs(total / draws - expected) < 0.02);
}
