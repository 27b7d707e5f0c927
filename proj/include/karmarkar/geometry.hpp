#pragma once

#include <cmath>
#include <cstddef>

#include "karmarkar/errors.hpp"

namespace karmarkar {

/// Radius of the smallest sphere centred at e containing the standard
/// simplex {x >= 0, e^T x = n}: the distance from e to a vertex such as
/// (0, ..., 0, n), which is sqrt((n-1) + (n-1)^2) = sqrt(n(n-1)).
inline double outer_radius(std::size_t n) {
  if (n < 2) throw DomainError("outer_radius: n must be >= 2");
  const double nd = static_cast<double>(n);
  return std::sqrt(nd * (nd - 1.0));
}

/// Radius of the largest sphere centred at e inside the standard simplex:
/// the distance from e to the tangent point (0, w, ..., w) with
/// w = n/(n-1), which is sqrt(1 + 1/(n-1)) = sqrt(n/(n-1)).
inline double inner_radius(std::size_t n) {
  if (n < 2) throw DomainError("inner_radius: n must be >= 2");
  const double nd = static_cast<double>(n);
  return std::sqrt(nd / (nd - 1.0));
}

/// Step fraction alpha = 1/(r+1), the maximiser of the per-iteration
/// potential-decrease bound. Guarantees alpha * r = r/(r+1) < 1, so the
/// step stays strictly inside the inner sphere's domain.
inline double step_alpha(double r) {
  if (!(r > 0.0)) throw DomainError("step_alpha: r must be > 0");
  return 1.0 / (r + 1.0);
}

/// Closed-form geometry of the n-dimensional standard simplex, plus the
/// step fraction used by the solver. R * r = n and r/R = 1/(n-1) hold by
/// construction; r > 1 for every n >= 2.
struct SimplexGeometry {
  std::size_t n;
  double R;
  double r;
  double alpha;

  static SimplexGeometry for_dimension(std::size_t n) {
    const double r = inner_radius(n);
    return SimplexGeometry{n, outer_radius(n), r, step_alpha(r)};
  }

  /// Same geometry with an explicit step fraction. Overrides must keep
  /// alpha * r < 1 or the decrease analysis loses its logarithm.
  SimplexGeometry with_alpha(double a) const {
    if (!(a > 0.0) || !(a * r < 1.0)) {
      throw DomainError("with_alpha: need 0 < alpha and alpha * r < 1");
    }
    return SimplexGeometry{n, R, r, a};
  }
};

} // namespace karmarkar
