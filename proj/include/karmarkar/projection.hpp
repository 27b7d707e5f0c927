#pragma once

#include <cstddef>
#include <utility>

#include "karmarkar/errors.hpp"
#include "karmarkar/linalg.hpp"

namespace karmarkar {

/// Stacked constraint rows B (k x n, k <= n) together with the factored
/// Gram system B B^T, built once and reused for every projection against
/// the row space of B. B B^T is symmetric positive definite exactly when B
/// has full row rank, which is what the factorization's pivot test decides.
///
/// Immutable after build; reject/project may be called concurrently on a
/// shared basis.
class ProjectionBasis {
public:
  static ProjectionBasis build(Matrix B, double pivot_rel_tol = kPivotRelTol) {
    if (B.rows() == 0 || B.rows() > B.cols()) {
      throw DimensionMismatch("ProjectionBasis: need 1 <= k <= n rows");
    }
    if (!B.all_finite()) {
      throw DomainError("ProjectionBasis: nonfinite entry");
    }
    Matrix G = gram(B);
    Cholesky factor = Cholesky::factor(G, pivot_rel_tol);
    return ProjectionBasis(std::move(B), std::move(G), std::move(factor));
  }

  std::size_t row_count() const { return B_.rows(); }
  std::size_t col_count() const { return B_.cols(); }

  const Matrix& rows() const { return B_; }
  const Matrix& gram_matrix() const { return G_; }
  const Cholesky& factor() const { return chol_; }

  /// Solve (B B^T) y = w. One iterative-refinement pass when the residual
  /// exceeds kRefineRelTol * ||w||.
  Vector solve_gram(const Vector& w) const {
    Vector y = chol_.solve(w);
    Vector residual = w;
    const Vector Gy = G_.apply(y);
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= Gy[i];
    if (norm2(residual) > kRefineRelTol * norm2(w)) {
      const Vector correction = chol_.solve(residual);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += correction[i];
    }
    return y;
  }

private:
  ProjectionBasis(Matrix B, Matrix G, Cholesky chol)
      : B_(std::move(B)), G_(std::move(G)), chol_(std::move(chol)) {}

  Matrix B_;
  Matrix G_;
  Cholesky chol_;
};

/// Component of v orthogonal to every row of B:
///
///   E = v - B^T (B B^T)^{-1} B v
///
/// so B E = 0 and v - E lies in the row space. The n x n projection matrix
/// is never materialized; each application solves the k x k Gram system.
inline Vector reject(const ProjectionBasis& basis, const Vector& v) {
  if (v.size() != basis.col_count()) {
    throw DimensionMismatch("reject: v has wrong length");
  }
  const Vector w = basis.rows().apply(v);
  const Vector y = basis.solve_gram(w);
  const Vector p = basis.rows().apply_transpose(y);
  Vector e(v);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= p[i];
  return e;
}

/// Row-space component of v; complements reject so that
/// project(v) + reject(v) = v exactly by construction.
inline Vector project(const ProjectionBasis& basis, const Vector& v) {
  Vector e = reject(basis, v);
  Vector p(v);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] -= e[i];
  return p;
}

} // namespace karmarkar
