#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "karmarkar/transform.hpp"
#include "karmarkar/errors.hpp"

using namespace karmarkar;

namespace {

// Random interior point of the simplex e^T x = n.
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

Vector random_positive(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> uniform(0.1, 4.0);
  Vector a(n);
  for (double& ai : a) ai = uniform(rng);
  return a;
}

} // namespace

TEST_CASE("centering maps its anchor to the centre") {
  const Vector z{0.5, 1.5, 1.0};
  const Vector y = Transform::centering(z).apply(z);
  for (double yi : y) {
    CHECK_THAT(yi, Catch::Matchers::WithinAbs(1.0, 1e-14));
  }
}

TEST_CASE("transform properties on random draws") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Vector a = random_positive(rng, n);
    const Vector x = random_simplex_point(rng, n);
    const Transform T(a);
    const Vector y = T.apply(x);

    // Image stays strictly inside the simplex.
    double s = 0.0;
    for (double yi : y) {
      CHECK(yi > 0.0);
      s += yi;
    }
    CHECK_THAT(s, Catch::Matchers::WithinAbs(static_cast<double>(n), 1e-10));

    // Scale invariance in x.
    for (double lambda : {0.5, 2.0, 10.0}) {
      Vector scaled(x);
      for (double& xi : scaled) xi *= lambda;
      const Vector y2 = T.apply(scaled);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK_THAT(y2[i], Catch::Matchers::WithinAbs(y[i], 1e-12));
      }
    }

    // Round trip through the inverse transform.
    const Vector back = T.invert(y);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK_THAT(back[i], Catch::Matchers::WithinAbs(x[i], 1e-10));
    }
  }
}

TEST_CASE("zeros are preserved in both directions") {
  const Transform T(Vector{2.0, 1.0, 0.5, 1.0});
  const Vector y = T.apply({0.0, 2.0, 0.0, 2.0});
  CHECK(y[0] == 0.0);
  CHECK(y[2] == 0.0);
  CHECK(y[1] > 0.0);
  CHECK(y[3] > 0.0);
}

TEST_CASE("transform argument checking") {
  CHECK_THROWS_AS(Transform(Vector{1.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(Transform(Vector{1.0, -2.0, 1.0}), DomainError);
  CHECK_THROWS_AS(Transform::centering({1.0, 0.0, 2.0}), NotInterior);

  const Transform T(Vector{1.0, 1.0, 1.0});
  CHECK_THROWS_AS(T.apply({1.0, 1.0}), DimensionMismatch);
  CHECK_THROWS_AS(T.apply({1.0, -0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(T.apply({0.0, 0.0, 0.0}), ZeroDenominator);
}

TEST_CASE("scaled subproblem") {
  const Problem problem(Matrix{{1.0, 1.0, -2.0}}, Vector{1.0, 0.0, 0.0});
  const Vector z{0.5, 1.5, 1.0};  // feasible: 0.5 + 1.5 - 2 = 0, sum = 3
  const Problem sub = scaled_subproblem(problem, z);

  CHECK(sub.dimension() == 3);
  CHECK(sub.constraints()(0, 0) == 0.5);
  CHECK(sub.constraints()(0, 1) == 1.5);
  CHECK(sub.constraints()(0, 2) == -2.0);
  CHECK(sub.cost()[0] == 0.5);
  CHECK(sub.cost()[1] == 0.0);
  CHECK(sub.cost()[2] == 0.0);

  // The centre is feasible for the subproblem by construction.
  CHECK(norm_inf(sub.constraints().apply(ones(3))) < 1e-12);

  SECTION("infeasible or boundary anchors are refused") {
    CHECK_THROWS_AS(scaled_subproblem(problem, {1.0, 1.0, 1.0, 1.0}),
                    DimensionMismatch);
    CHECK_THROWS_AS(scaled_subproblem(problem, {1.0, 0.0, 2.0}), NotInterior);
    // A z != 0
    CHECK_THROWS_AS(scaled_subproblem(problem, {2.0, 0.5, 0.5}), NotFeasible);
    // sum z != n
    CHECK_THROWS_AS(scaled_subproblem(problem, {0.25, 0.75, 0.5}), NotFeasible);
  }
}
