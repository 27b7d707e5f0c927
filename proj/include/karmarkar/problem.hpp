#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "karmarkar/errors.hpp"
#include "karmarkar/linalg.hpp"

namespace karmarkar {

/// Default absolute, componentwise feasibility tolerance. Instances are
/// desk-scale dense with entries of order 1-10.
inline constexpr double kTolFeas = 1e-9;

/// A linear program in Karmarkar canonical form:
///
///   min c^T x   subject to   A x = 0,  e^T x = n,  x >= 0
///
/// with the centre e = (1,...,1) assumed feasible (A e = 0) and the optimal
/// value assumed to be zero. Construction checks shapes only; the modelling
/// assumptions are checked by validate() and, at desk scale, certified by
/// the enumeration oracle.
class Problem {
public:
  Problem(Matrix constraints, Vector cost)
      : A_(std::move(constraints)), c_(std::move(cost)) {
    const std::size_t n = c_.size();
    if (n < 2) {
      throw DimensionMismatch("Problem: dimension n must be >= 2");
    }
    if (A_.rows() > 0 && A_.cols() != n) {
      throw DimensionMismatch("Problem: A has " + std::to_string(A_.cols()) +
                              " columns but c has " + std::to_string(n) +
                              " entries");
    }
    if (A_.rows() + 1 >= n) {
      std::ostringstream os;
      os << "Problem: need m < n-1 (got m = " << A_.rows() << ", n = " << n
         << ")";
      throw DimensionMismatch(os.str());
    }
  }

  std::size_t dimension() const { return c_.size(); }          // n
  std::size_t constraint_count() const { return A_.rows(); }   // m

  const Matrix& constraints() const { return A_; }
  const Vector& cost() const { return c_; }

  /// c^T e; positive for the nontrivial case, zero means the centre is
  /// already optimal.
  double cost_at_centre() const { return sum(c_); }

private:
  Matrix A_;
  Vector c_;
};

enum class CheckStatus { Pass, Fail, Unverified };

struct ValidationCheck {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  /// Indices into the stacked rows [A; e^T] found linearly dependent
  /// (index m denotes the e^T row). Empty when the rank check passes.
  std::vector<std::size_t> dependent_rows;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

namespace detail {

inline Matrix stack_with_ones_row(const Matrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  Matrix B(m + 1, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = A(i, j);
  for (std::size_t j = 0; j < n; ++j) B(m, j) = 1.0;
  return B;
}

} // namespace detail

/// Check the canonical-form assumptions: A e = 0, full row rank of the
/// stacked matrix [A; e^T], and the sign of c^T e. The zero-optimum
/// assumption cannot be decided here and is reported as unverified; the
/// oracle module can certify it for n <= 16.
///
/// Pure: the same problem always yields an identical report.
inline ValidationReport validate(const Problem& problem,
                                 double tol_feas = kTolFeas) {
  ValidationReport report;
  const Matrix& A = problem.constraints();
  const std::size_t m = problem.constraint_count();
  const std::size_t n = problem.dimension();

  {
    const Vector Ae = A.apply(ones(n));
    const double worst = norm_inf(Ae);
    std::ostringstream os;
    os << "max |(A e)_i| = " << worst << " (tol " << tol_feas << ")";
    report.checks.push_back({"A e = 0",
                             worst <= tol_feas ? CheckStatus::Pass
                                               : CheckStatus::Fail,
                             os.str()});
  }

  {
    // Stacking order matters for the diagnostic: rows of A first, e^T last,
    // so a dependent e^T row is reported as such rather than blaming A.
    const Matrix stacked = detail::stack_with_ones_row(A);
    const RankProfile profile = rank_profile(gram(stacked));
    std::ostringstream os;
    if (profile.rank == m + 1) {
      os << "rank " << profile.rank << " of " << m + 1;
      report.checks.push_back({"rank [A; e^T]", CheckStatus::Pass, os.str()});
    } else {
      os << "rank " << profile.rank << " of " << m + 1 << "; dependent rows:";
      for (std::size_t idx : profile.dependent_rows) {
        if (idx == m)
          os << " e^T";
        else
          os << " A[" << idx << "]";
      }
      report.checks.push_back({"rank [A; e^T]", CheckStatus::Fail, os.str()});
      report.dependent_rows = profile.dependent_rows;
    }
  }

  {
    const double cte = problem.cost_at_centre();
    std::ostringstream os;
    os << "c^T e = " << cte;
    if (cte < -tol_feas) {
      os << " < 0 contradicts a zero optimum with feasible centre";
      report.checks.push_back({"c^T e >= 0", CheckStatus::Fail, os.str()});
    } else {
      if (cte <= tol_feas) os << " (trivial: centre already optimal)";
      report.checks.push_back({"c^T e >= 0", CheckStatus::Pass, os.str()});
    }
  }

  report.checks.push_back({"optimal value is 0", CheckStatus::Unverified,
                           "certify by vertex enumeration for n <= 16"});
  return report;
}

/// Map a point of the unit simplex e^T x = 1 onto the solver's simplex
/// e^T x = n by the scaling x' = n x.
inline Vector rescale_unit_simplex(const Vector& x, std::size_t n,
                                   double tol_feas = kTolFeas) {
  if (x.size() != n) {
    throw DimensionMismatch("rescale_unit_simplex: x has " +
                            std::to_string(x.size()) + " entries, expected " +
                            std::to_string(n));
  }
  for (double xi : x) {
    if (xi < -tol_feas) {
      throw NotOnSimplex("rescale_unit_simplex: negative coordinate");
    }
  }
  const double s = sum(x);
  if (std::abs(s - 1.0) > tol_feas) {
    std::ostringstream os;
    os << "rescale_unit_simplex: e^T x = " << s << ", expected 1";
    throw NotOnSimplex(os.str());
  }
  Vector y(x);
  for (double& yi : y) yi *= static_cast<double>(n);
  return y;
}

} // namespace karmarkar
