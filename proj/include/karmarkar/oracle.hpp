#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "karmarkar/errors.hpp"
#include "karmarkar/linalg.hpp"
#include "karmarkar/problem.hpp"

namespace karmarkar {

/// Dimension cap for exhaustive vertex enumeration. C(n, m+1) basis
/// candidates are visited; past n = 16 the count stops being a test-time
/// quantity.
inline constexpr std::size_t kOracleMaxDimension = 16;

struct VertexSet {
  /// Vertices of {x : Ax = 0, e^T x = n, x >= 0}, each of length n,
  /// sorted lexicographically, pairwise distinct under componentwise
  /// tolerance.
  std::vector<Vector> vertices;
  double optimum_value = 0.0;  // min of c^T v over vertices
  Vector optimum_vertex;
};

namespace detail {

inline bool lexicographic_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool within_tolerance(const Vector& a, const Vector& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

} // namespace detail

/// Enumerate every vertex of the feasible polytope by brute force and
/// record the exact optimum of the problem's cost over them.
///
/// A vertex has at most m+1 nonzero coordinates (the active bounds
/// x_i = 0 together with the m+1 equalities must pin the point). For each
/// size-(m+1) column subset S, solve
///
///   [A; e^T]_S u = (0, ..., 0, n)
///
/// for the candidate support values; keep solutions with u >= 0 (within
/// tolerance), embed into R^n, deduplicate and sort. Singular square
/// systems are skipped (the same relative pivot threshold as the
/// projection factorization); they correspond to no vertex. Negative
/// coordinates above -negativity_tol are clamped to zero so active bounds
/// hold exactly.
inline VertexSet enumerate_vertices(const Problem& problem,
                                    double negativity_tol = 1e-12,
                                    double dedup_tol = 1e-9) {
  const std::size_t n = problem.dimension();
  const std::size_t m = problem.constraint_count();
  if (n > kOracleMaxDimension) {
    throw TooLarge("enumerate_vertices: n exceeds the enumeration cap");
  }
  const std::size_t k = m + 1;  // basis size
  const Matrix& A = problem.constraints();

  std::vector<Vector> found;
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;

  const auto advance = [&]() -> bool {
    // Next k-combination of {0, ..., n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (subset[i] != i + n - k) {
        ++subset[i];
        for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  do {
    Matrix basis(k, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) basis(i, j) = A(i, subset[j]);
    for (std::size_t j = 0; j < k; ++j) basis(m, j) = 1.0;

    Vector rhs(k, 0.0);
    rhs[m] = static_cast<double>(n);

    const std::optional<Vector> u = solve_square(basis, rhs, kPivotRelTol);
    if (!u) continue;

    bool nonnegative = true;
    for (double ui : *u) {
      if (ui < -negativity_tol) {
        nonnegative = false;
        break;
      }
    }
    if (!nonnegative) continue;

    Vector vertex(n, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      vertex[subset[j]] = std::max((*u)[j], 0.0);
    }

    bool duplicate = false;
    for (const Vector& seen : found) {
      if (detail::within_tolerance(seen, vertex, dedup_tol)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back(std::move(vertex));
  } while (advance());

  if (found.empty()) {
    // The centre e is feasible whenever Ae = 0, so a bounded nonempty
    // polytope with no vertices cannot occur; treat as internal error.
    throw EmptyFeasibleSet("enumerate_vertices: no basis yields a feasible point");
  }
  std::sort(found.begin(), found.end(), detail::lexicographic_less);

  VertexSet result;
  result.vertices = std::move(found);
  result.optimum_vertex = result.vertices.front();
  result.optimum_value = dot(problem.cost(), result.optimum_vertex);
  for (const Vector& v : result.vertices) {
    const double value = dot(problem.cost(), v);
    if (value < result.optimum_value) {
      result.optimum_value = value;
      result.optimum_vertex = v;
    }
  }
  return result;
}

/// Certify the zero-optimum assumption: min c^T x over the polytope
/// (attained at a vertex) is 0 within tolerance.
inline bool certify_zero_optimum(const Problem& problem, double tol = 1e-9) {
  return std::abs(enumerate_vertices(problem).optimum_value) <= tol;
}

/// Shift a cost vector so the optimum over the polytope moves to exactly
/// zero without changing the argmin: with v* = min c0^T x,
///
///   c = c0 - (v* / n) e
///
/// subtracts the constant v* from the objective everywhere on e^T x = n.
inline Vector shift_cost_to_zero_optimum(const Vector& cost,
                                         double optimal_value,
                                         std::size_t n) {
  if (cost.size() != n) {
    throw DimensionMismatch("shift_cost_to_zero_optimum: cost has wrong length");
  }
  Vector shifted = cost;
  const double delta = optimal_value / static_cast<double>(n);
  for (double& ci : shifted) ci -= delta;
  return shifted;
}

/// Deterministically generate a feasible instance in canonical form whose
/// optimal value is exactly zero.
///
/// Constraint rows are standard-normal draws with the row mean subtracted,
/// which enforces A e = 0 by construction. The raw cost is also standard
/// normal; its vertex minimum v* is computed by enumeration and shifted
/// out. Since e is feasible with raw objective sum(c0), the shifted
/// c^T e = sum(c0) - v* is automatically nonnegative; rank-deficient and
/// trivially-optimal draws are discarded and redrawn with the seed
/// advanced.
inline Problem make_zero_optimum_instance(std::uint64_t seed, std::size_t n,
                                          std::size_t m) {
  if (n > kOracleMaxDimension) {
    throw TooLarge("make_zero_optimum_instance: n exceeds the enumeration cap");
  }
  if (n < 2 || m + 1 >= n) {
    throw DomainError("make_zero_optimum_instance: need m + 1 < n and n >= 2");
  }

  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::normal_distribution<double> normal(0.0, 1.0);

    Matrix A(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      double mean = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        A(i, j) = normal(rng);
        mean += A(i, j);
      }
      mean /= static_cast<double>(n);
      for (std::size_t j = 0; j < n; ++j) A(i, j) -= mean;
    }

    Vector cost(n);
    for (double& ci : cost) ci = normal(rng);

    Problem raw(A, cost);
    const ValidationReport report = validate(raw);
    bool rank_ok = true;
    for (const ValidationCheck& check : report.checks) {
      if (check.name == "rank [A; e^T]" && check.status == CheckStatus::Fail) {
        rank_ok = false;
      }
    }
    if (!rank_ok) continue;

    const double v_star = enumerate_vertices(raw).optimum_value;
    const Vector shifted = shift_cost_to_zero_optimum(cost, v_star, n);
    Problem instance(A, shifted);
    if (instance.cost_at_centre() <= kTolFeas) continue;  // avoid trivial draws
    return instance;
  }
  throw RankDeficient(
      "make_zero_optimum_instance: no usable draw in 100 attempts");
}

} // namespace karmarkar
