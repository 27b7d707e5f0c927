#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "karmarkar/errors.hpp"
#include "karmarkar/linalg.hpp"

namespace karmarkar {

/// The potential at a strictly positive point, split into its two terms:
///
///   phi = n log(c^T x) - sum_i log(x_i)
///
/// All logarithms are natural; the per-iteration decrease constant
/// 1 - ln 2 depends on that. On the simplex e^T x = n the log-barrier sum
/// is <= 0 by AM-GM, with equality only at the centre.
struct PotentialValue {
  double phi;
  double objective;        // c^T x
  double log_barrier_sum;  // sum_i log x_i
};

/// Evaluate the potential. Scale invariant: phi(lambda x) = phi(x) for
/// every lambda > 0, since the two terms pick up cancelling n log lambda.
inline PotentialValue phi(const Vector& cost, const Vector& x) {
  if (cost.size() != x.size()) {
    throw DimensionMismatch("phi: cost and x lengths disagree");
  }
  const double objective = dot(cost, x);
  if (!(objective > 0.0)) {
    // Not a failure during a solve: the optimum is 0, so reaching or
    // crossing it means the stopping accuracy was surpassed.
    throw NonpositiveObjective("phi: c^T x <= 0");
  }
  double barrier = 0.0;
  for (double xi : x) {
    if (!(xi > 0.0)) throw DomainError("phi: x must be strictly positive");
    barrier += std::log(xi);
  }
  const double n = static_cast<double>(x.size());
  return PotentialValue{n * std::log(objective) - barrier, objective, barrier};
}

/// Psi(t) = t - log(1+t), defined for t > -1. Nonnegative with a single
/// zero at t = 0; Psi(1) = 1 - ln 2 is the guaranteed per-iteration
/// potential decrease. Evaluated via log1p rather than the power series.
inline double psi(double t) {
  if (!(t > -1.0)) throw DomainError("psi: t must be > -1");
  return t - std::log1p(t);
}

/// Upper bound on the objective implied by the potential: for any x > 0 on
/// the simplex e^T x = n,
///
///   c^T x <= exp(phi(x) / n)
///
/// because exp(phi/n) = c^T x * (prod x_i)^{-1/n} and the geometric mean of
/// simplex coordinates is at most 1. Equality holds only at the centre.
/// Driving phi down therefore drives the objective down, which is what the
/// iteration-count bound rests on.
inline double objective_upper_bound_from_phi(double phi_value, std::size_t n) {
  if (n < 2) throw DomainError("objective_upper_bound_from_phi: n must be >= 2");
  return std::exp(phi_value / static_cast<double>(n));
}

/// Check the majorization inequality behind the decrease proof: with
/// a^2 = sum_i b_i^2 and all arguments inside the domain of Psi,
///
///   Psi(-|a| t) >= sum_i Psi(b_i t)   for t > 0.
///
/// The underlying inequality is strict except in degenerate cases (some
/// b_i = -|a|, rest zero); the check is nonstrict with a small slack so
/// those cases and rounding do not flip it.
inline bool psi_majorization_check(double a, const std::vector<double>& bs,
                                   double t) {
  if (!(t > 0.0)) throw PreconditionViolated("psi_majorization_check: t <= 0");
  double sq = 0.0;
  for (double b : bs) sq += b * b;
  const double scale = std::max({a * a, sq, 1e-300});
  if (std::abs(a * a - sq) > 1e-10 * scale) {
    throw PreconditionViolated(
        "psi_majorization_check: a^2 != sum b_i^2 within tolerance");
  }
  const double lhs_arg = -std::abs(a) * t;
  if (!(lhs_arg > -1.0)) {
    throw PreconditionViolated("psi_majorization_check: |a| t >= 1");
  }
  double rhs = 0.0;
  for (double b : bs) {
    if (!(b * t > -1.0)) {
      throw PreconditionViolated("psi_majorization_check: b_i t <= -1");
    }
    rhs += psi(b * t);
  }
  const double lhs = psi(lhs_arg);
  return lhs + 1e-12 * std::max(1.0, std::abs(lhs)) >= rhs;
}

} // namespace karmarkar
