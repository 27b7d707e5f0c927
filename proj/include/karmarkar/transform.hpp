#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>

#include "karmarkar/errors.hpp"
#include "karmarkar/linalg.hpp"
#include "karmarkar/problem.hpp"

namespace karmarkar {

/// Boundary tolerance for points that must be strictly interior: since the
/// inverse coefficients 1/z_i blow up at the boundary and the solver's step
/// rule keeps iterates interior by construction, hitting this is a bug
/// signal rather than a recoverable state.
inline double interior_tolerance(std::size_t n) {
  return 1e-12 * static_cast<double>(n);
}

/// The projective transform T_a on the simplex e^T x = n:
///
///   y_i = n a_i x_i / sum_j a_j x_j
///
/// Maps the simplex onto itself, one-to-one, with inverse T_b for
/// b = a^{-1}. With a = 1/z the interior point z is mapped to the centre e.
/// Coefficients must be strictly positive.
class Transform {
public:
  explicit Transform(Vector coefficients) : a_(std::move(coefficients)) {
    for (double ai : a_) {
      if (!(ai > 0.0) || !std::isfinite(ai)) {
        throw DomainError("Transform: coefficients must be positive finite");
      }
    }
  }

  /// T_{1/z}: the transform that maps the interior point z to the centre.
  static Transform centering(const Vector& z) {
    const double tol = interior_tolerance(z.size());
    Vector a(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] <= tol) {
        throw NotInterior("Transform::centering: coordinate at boundary");
      }
      a[i] = 1.0 / z[i];
    }
    return Transform(std::move(a));
  }

  const Vector& coefficients() const { return a_; }

  /// y_i = n a_i x_i / sum_j a_j x_j for x >= 0. Scale invariant in x;
  /// e^T y = n up to rounding; y_i = 0 iff x_i = 0.
  Vector apply(const Vector& x) const { return map_with(a_, x); }

  /// T_b with b = a^{-1}; invert(apply(x)) = x on the simplex.
  Vector invert(const Vector& y) const {
    Vector b(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) b[i] = 1.0 / a_[i];
    return map_with(b, y);
  }

private:
  static Vector map_with(const Vector& coeff, const Vector& x) {
    if (x.size() != coeff.size()) {
      throw DimensionMismatch("Transform: x has wrong length");
    }
    for (double xi : x) {
      if (xi < 0.0) {
        throw DomainError("Transform: x must be nonnegative");
      }
    }
    double denom = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) denom += coeff[i] * x[i];
    if (!(denom > 0.0)) {
      throw ZeroDenominator("Transform: sum a_j x_j is not positive");
    }
    const double n = static_cast<double>(x.size());
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      y[i] = n * coeff[i] * x[i] / denom;
    return y;
  }

  Vector a_;
};

/// The problem seen after centering the current interior iterate z: matrix
/// A Z and cost Z c with Z = diag(z). The centre e is feasible for the
/// result because (A Z) e = A z = 0.
inline Problem scaled_subproblem(const Problem& problem, const Vector& z,
                                 double tol_feas = kTolFeas) {
  const std::size_t n = problem.dimension();
  if (z.size() != n) {
    throw DimensionMismatch("scaled_subproblem: z has wrong length");
  }
  const double tol_interior = interior_tolerance(n);
  for (double zi : z) {
    if (zi <= tol_interior) {
      throw NotInterior("scaled_subproblem: z touches the boundary");
    }
  }
  const Vector Az = problem.constraints().apply(z);
  if (norm_inf(Az) > tol_feas) {
    std::ostringstream os;
    os << "scaled_subproblem: max |(A z)_i| = " << norm_inf(Az);
    throw NotFeasible(os.str());
  }
  if (std::abs(sum(z) - static_cast<double>(n)) > tol_feas) {
    std::ostringstream os;
    os << "scaled_subproblem: e^T z = " << sum(z) << ", expected " << n;
    throw NotFeasible(os.str());
  }

  const Matrix& A = problem.constraints();
  Matrix AZ(A.rows(), n);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) AZ(i, j) = A(i, j) * z[j];
  Vector Zc(n);
  for (std::size_t j = 0; j < n; ++j) Zc[j] = problem.cost()[j] * z[j];
  return Problem(std::move(AZ), std::move(Zc));
}

} // namespace karmarkar
