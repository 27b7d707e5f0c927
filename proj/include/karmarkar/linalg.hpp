#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "karmarkar/errors.hpp"

namespace karmarkar {

using Vector = std::vector<double>;

/// Relative pivot threshold shared by every factorization in the library.
/// A pivot below this fraction of the largest pivot seen so far means the
/// rows are treated as linearly dependent.
inline constexpr double kPivotRelTol = 1e-10;

/// Gram solves are refined once when the residual exceeds this fraction of
/// the right-hand side norm.
inline constexpr double kRefineRelTol = 1e-12;

inline double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dot: vector lengths disagree");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vector& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double norm_inf(const Vector& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

inline double sum(const Vector& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

inline Vector ones(std::size_t n) { return Vector(n, 1.0); }

/// Dense row-major matrix. Sized for desk-scale problems; no views, no
/// sparsity, value semantics throughout.
class Matrix {
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<double>> rows)
      : rows_(rows.size()) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw DimensionMismatch("Matrix: ragged initializer rows");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }

  /// y = A x
  Vector apply(const Vector& x) const {
    if (x.size() != cols_) {
      throw DimensionMismatch("Matrix::apply: x has wrong length");
    }
    Vector y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      double acc = 0.0;
      const double* row = &data_[i * cols_];
      for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
      y[i] = acc;
    }
    return y;
  }

  /// y = A^T x
  Vector apply_transpose(const Vector& x) const {
    if (x.size() != rows_) {
      throw DimensionMismatch("Matrix::apply_transpose: x has wrong length");
    }
    Vector y(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const double* row = &data_[i * cols_];
      for (std::size_t j = 0; j < cols_; ++j) y[j] += row[j] * x[i];
    }
    return y;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double x) { return std::isfinite(x); });
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// B B^T for a k x n matrix B; symmetric k x k.
inline Matrix gram(const Matrix& B) {
  const std::size_t k = B.rows();
  Matrix G(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < B.cols(); ++t) acc += B(i, t) * B(j, t);
      G(i, j) = acc;
      G(j, i) = acc;
    }
  }
  return G;
}

/// Frobenius norm of (A - B).
inline double frobenius_distance(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw DimensionMismatch("frobenius_distance: shapes disagree");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const double d = A(i, j) - B(i, j);
      s += d * d;
    }
  return std::sqrt(s);
}

inline double frobenius_norm(const Matrix& A) {
  double s = 0.0;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * A(i, j);
  return std::sqrt(s);
}

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// The pivot threshold doubles as the rank decision: a Schur-complement
/// diagonal below kPivotRelTol times the largest pivot so far throws
/// RankDeficient instead of producing a garbage factor.
class Cholesky {
public:
  static Cholesky factor(const Matrix& G, double pivot_rel_tol = kPivotRelTol) {
    if (G.rows() != G.cols()) {
      throw DimensionMismatch("Cholesky: matrix is not square");
    }
    const std::size_t k = G.rows();
    Matrix L(k, k);
    double max_pivot = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      double d = G(j, j);
      for (std::size_t t = 0; t < j; ++t) d -= L(j, t) * L(j, t);
      if (d <= 0.0) {
        throw RankDeficient(row_message(j));
      }
      max_pivot = std::max(max_pivot, d);
      if (d < pivot_rel_tol * max_pivot) {
        throw RankDeficient(row_message(j));
      }
      L(j, j) = std::sqrt(d);
      for (std::size_t i = j + 1; i < k; ++i) {
        double s = G(i, j);
        for (std::size_t t = 0; t < j; ++t) s -= L(i, t) * L(j, t);
        L(i, j) = s / L(j, j);
      }
    }
    return Cholesky(std::move(L));
  }

  /// Solve L L^T y = w by forward/back substitution.
  Vector solve(const Vector& w) const {
    const std::size_t k = L_.rows();
    if (w.size() != k) {
      throw DimensionMismatch("Cholesky::solve: rhs has wrong length");
    }
    Vector y(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      double s = w[i];
      for (std::size_t j = 0; j < i; ++j) s -= L_(i, j) * y[j];
      y[i] = s / L_(i, i);
    }
    for (std::size_t ii = k; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t j = ii + 1; j < k; ++j) s -= L_(j, ii) * y[j];
      y[ii] = s / L_(ii, ii);
    }
    return y;
  }

  const Matrix& lower() const { return L_; }

  /// L L^T, for factorization-quality checks.
  Matrix reconstruct() const {
    const std::size_t k = L_.rows();
    Matrix G(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double acc = 0.0;
        for (std::size_t t = 0; t <= j; ++t) acc += L_(i, t) * L_(j, t);
        G(i, j) = acc;
        G(j, i) = acc;
      }
    return G;
  }

private:
  explicit Cholesky(Matrix L) : L_(std::move(L)) {}

  static std::string row_message(std::size_t j) {
    std::ostringstream os;
    os << "rank deficient: pivot " << j << " below threshold";
    return os.str();
  }

  Matrix L_;
};

struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> dependent_rows;
};

/// Diagnostic variant of the Cholesky rank test: instead of refusing at the
/// first bad pivot it records the row and keeps factoring with that row
/// removed, so every dependent row gets reported. Rows earlier in the
/// stacking order are kept; later duplicates are the ones flagged.
inline RankProfile rank_profile(const Matrix& G,
                                double pivot_rel_tol = kPivotRelTol) {
  if (G.rows() != G.cols()) {
    throw DimensionMismatch("rank_profile: matrix is not square");
  }
  const std::size_t k = G.rows();
  Matrix L(k, k);
  std::vector<bool> kept(k, false);
  RankProfile profile;
  double max_pivot = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    double d = G(j, j);
    for (std::size_t t = 0; t < j; ++t)
      if (kept[t]) d -= L(j, t) * L(j, t);
    const bool dependent =
        d <= 0.0 || (max_pivot > 0.0 && d < pivot_rel_tol * max_pivot);
    if (dependent) {
      profile.dependent_rows.push_back(j);
      continue;
    }
    max_pivot = std::max(max_pivot, d);
    kept[j] = true;
    ++profile.rank;
    L(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < k; ++i) {
      double s = G(i, j);
      for (std::size_t t = 0; t < j; ++t)
        if (kept[t]) s -= L(i, t) * L(j, t);
      L(i, j) = s / L(j, j);
    }
  }
  return profile;
}

/// Solve a square system by LU with partial pivoting. Returns nullopt when a
/// pivot falls below the shared relative threshold (singular system); used by
/// the vertex enumeration to skip bases that do not define a vertex.
inline std::optional<Vector> solve_square(const Matrix& M, const Vector& rhs,
                                          double pivot_rel_tol = kPivotRelTol) {
  if (M.rows() != M.cols()) {
    throw DimensionMismatch("solve_square: matrix is not square");
  }
  const std::size_t k = M.rows();
  if (rhs.size() != k) {
    throw DimensionMismatch("solve_square: rhs has wrong length");
  }
  Matrix U = M;
  Vector b = rhs;
  double max_pivot = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t p = j;
    for (std::size_t i = j + 1; i < k; ++i)
      if (std::abs(U(i, j)) > std::abs(U(p, j))) p = i;
    const double piv = std::abs(U(p, j));
    if (piv == 0.0) return std::nullopt;
    max_pivot = std::max(max_pivot, piv);
    if (piv < pivot_rel_tol * max_pivot) return std::nullopt;
    if (p != j) {
      for (std::size_t t = 0; t < k; ++t) std::swap(U(j, t), U(p, t));
      std::swap(b[j], b[p]);
    }
    for (std::size_t i = j + 1; i < k; ++i) {
      const double f = U(i, j) / U(j, j);
      if (f == 0.0) continue;
      for (std::size_t t = j; t < k; ++t) U(i, t) -= f * U(j, t);
      b[i] -= f * b[j];
    }
  }
  Vector x(k, 0.0);
  for (std::size_t ii = k; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < k; ++j) s -= U(ii, j) * x[j];
    x[ii] = s / U(ii, ii);
  }
  return x;
}

} // namespace karmarkar
