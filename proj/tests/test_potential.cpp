#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "karmarkar/potential.hpp"
#include "karmarkar/errors.hpp"

using namespace karmarkar;

namespace {

Vector random_simplex_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  Vector x(n);
  double s = 0.0;
  for (double& xi : x) {
    xi = uniform(rng);
    s += xi;
  }
  for (double& xi : x) xi *= static_cast<double>(n) / s;
  return x;
}

} // namespace

TEST_CASE("potential value by hand") {
  // phi = 3 log(0.5) - (log 0.5 + log 1.5 + log 1)
  const PotentialValue pv = phi({1.0, 0.0, 0.0}, {0.5, 1.5, 1.0});
  CHECK_THAT(pv.phi, Catch::Matchers::WithinAbs(-1.791759469228055, 1e-14));
  CHECK(pv.objective == 0.5);
  CHECK_THAT(pv.log_barrier_sum,
             Catch::Matchers::WithinAbs(std::log(0.75), 1e-14));
}

TEST_CASE("potential vanishes at the centre when c^T e = 1") {
  const PotentialValue pv = phi({1.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
  CHECK(pv.phi == 0.0);
  CHECK(pv.log_barrier_sum == 0.0);
}

TEST_CASE("potential is scale invariant") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> uniform(0.1, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    Vector c(n), x(n);
    for (double& ci : c) ci = uniform(rng);
    for (double& xi : x) xi = uniform(rng);
    const double base = phi(c, x).phi;
    for (double lambda : {0.5, 2.0, 10.0}) {
      Vector scaled(x);
      for (double& xi : scaled) xi *= lambda;
      CHECK_THAT(phi(c, scaled).phi, Catch::Matchers::WithinAbs(base, 1e-9));
    }
  }
}

TEST_CASE("log barrier is nonpositive on the simplex") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Vector x = random_simplex_point(rng, n);
    Vector c(n, 0.0);
    c[0] = 1.0;
    CHECK(phi(c, x).log_barrier_sum <= 1e-12);
  }
}

TEST_CASE("potential argument checking") {
  CHECK_THROWS_AS(phi({1.0, 0.0}, {1.0, 1.0, 1.0}), DimensionMismatch);
  CHECK_THROWS_AS(phi({1.0, 0.0, 0.0}, {0.0, 2.0, 1.0}), NonpositiveObjective);
  CHECK_THROWS_AS(phi({-1.0, 0.0, 0.0}, {1.0, 1.0, 1.0}),
                  NonpositiveObjective);
  CHECK_THROWS_AS(phi({1.0, 0.0, 0.0}, {1.0, 2.0, 0.0}), DomainError);
}

TEST_CASE("psi constants") {
  CHECK(psi(0.0) == 0.0);
  CHECK_THAT(psi(1.0), Catch::Matchers::WithinAbs(1.0 - std::log(2.0), 1e-15));
  CHECK_THAT(psi(1.0),
             Catch::Matchers::WithinAbs(0.3068528194400547, 1e-12));
  CHECK(psi(0.5) > 0.0);
  CHECK(psi(-0.5) > 0.0);
  CHECK_THROWS_AS(psi(-1.0), DomainError);
  CHECK_THROWS_AS(psi(-2.0), DomainError);
}

TEST_CASE("objective bound from the potential") {
  // exp(phi/n) = c^T x / geomean(x) >= c^T x on the simplex.
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3;
    const Vector x = random_simplex_point(rng, n);
    const Vector c{1.0, 0.0, 0.0};
    const PotentialValue pv = phi(c, x);
    const double bound = objective_upper_bound_from_phi(pv.phi, n);
    CHECK(pv.objective <= bound * (1.0 + 1e-12));
  }

  // Equality at the centre, where the geometric mean is 1.
  const PotentialValue centre = phi({1.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
  CHECK_THAT(objective_upper_bound_from_phi(centre.phi, 3),
             Catch::Matchers::WithinAbs(centre.objective, 1e-14));

  CHECK_THROWS_AS(objective_upper_bound_from_phi(0.0, 1), DomainError);
}

TEST_CASE("psi majorization holds for unit vectors") {
  std::mt19937_64 rng(67);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> t_draw(0.01, 0.99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<double> b(n);
    double norm = 0.0;
    for (double& bi : b) {
      bi = normal(rng);
      norm += bi * bi;
    }
    norm = std::sqrt(norm);
    for (double& bi : b) bi /= norm;
    CHECK(psi_majorization_check(1.0, b, t_draw(rng)));
  }
}

TEST_CASE("psi majorization degenerate equality") {
  // bs concentrated on one negative coordinate: both sides equal psi(-t).
  CHECK(psi_majorization_check(1.0, {-1.0, 0.0, 0.0}, 0.5));
}

TEST_CASE("psi majorization precondition checking") {
  CHECK_THROWS_AS(psi_majorization_check(1.0, {1.0, 0.0}, 0.0),
                  PreconditionViolated);
  CHECK_THROWS_AS(psi_majorization_check(1.0, {1.0, 0.0}, -0.5),
                  PreconditionViolated);
  // a^2 != sum b_i^2
  CHECK_THROWS_AS(psi_majorization_check(2.0, {1.0, 0.0}, 0.5),
                  PreconditionViolated);
  // |a| t >= 1 leaves the domain of psi on the left side
  CHECK_THROWS_AS(psi_majorization_check(2.0, {2.0, 0.0}, 0.6),
                  PreconditionViolated);
}
