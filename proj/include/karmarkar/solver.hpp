#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "karmarkar/errors.hpp"
#include "karmarkar/geometry.hpp"
#include "karmarkar/linalg.hpp"
#include "karmarkar/potential.hpp"
#include "karmarkar/problem.hpp"
#include "karmarkar/projection.hpp"

namespace karmarkar {

enum class SolveStatus {
  Converged,
  TrivialCentreOptimal,
  ConstantObjectiveOnFeasibleSet,
  IterationLimit,
  NumericalBreakdown,
};

inline std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::TrivialCentreOptimal: return "TrivialCentreOptimal";
    case SolveStatus::ConstantObjectiveOnFeasibleSet:
      return "ConstantObjectiveOnFeasibleSet";
    case SolveStatus::IterationLimit: return "IterationLimit";
    case SolveStatus::NumericalBreakdown: return "NumericalBreakdown";
  }
  return "Unknown";
}

struct SolverConfig {
  double epsilon = 1e-6;                 // stop once c^T x < epsilon
  std::int64_t max_iterations = 0;       // 0: four times the theoretical bound
  std::optional<double> alpha_override;  // else alpha = 1/(r+1)
  double tol_feas = kTolFeas;
  double tol_interior = 0.0;    // an iterate with min x_i at or below this
                                // has left the interior (breakdown)
  double tol_gradient = 1e-12;  // ||c_P|| below this fraction of ||Dc|| is 0
  bool trace_enabled = true;
};

/// Snapshot after one iteration. delta_phi is the potential drop from the
/// previous point, guaranteed to be at least 1 - ln 2 when the zero-optimum
/// assumption holds; steps falling measurably short of that are flagged,
/// since the shortfall is a symptom (though not proof) that no zero-cost
/// point exists.
struct IterationRecord {
  std::int64_t k = 0;
  Vector x;
  double objective = 0.0;
  double phi = 0.0;
  double delta_phi = 0.0;
  double projected_gradient_norm = 0.0;
  double min_coordinate = 0.0;
  // Objectives of the centred subproblem, before and after the sphere step:
  // (Dc)^T e and (Dc)^T z. Their ratio realises the per-step contraction.
  double transformed_objective_at_centre = 0.0;
  double transformed_objective_at_step = 0.0;
  bool below_guaranteed_decrease = false;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Converged;
  Vector final_x;
  std::int64_t iterations = 0;
  std::int64_t theoretical_bound = 0;
  std::vector<IterationRecord> trace;
};

/// Iterations sufficient to reach c^T x <= epsilon from the centre:
///
///   ceil( (n / Psi(1)) * ln(c^T e / epsilon) ),  Psi(1) = 1 - ln 2,
///
/// floored at zero (epsilon >= c^T e needs no iterations).
inline std::int64_t iteration_bound(std::size_t n, double c_dot_e,
                                    double epsilon) {
  if (n < 2) throw DomainError("iteration_bound: n must be >= 2");
  if (!(c_dot_e > 0.0)) throw DomainError("iteration_bound: c^T e must be > 0");
  if (!(epsilon > 0.0)) throw DomainError("iteration_bound: epsilon must be > 0");
  if (epsilon >= c_dot_e) return 0;
  const double raw =
      static_cast<double>(n) / psi(1.0) * std::log(c_dot_e / epsilon);
  return static_cast<std::int64_t>(std::ceil(raw));
}

/// Outcome of a single iteration from an interior feasible point.
struct StepResult {
  /// True when the projected gradient vanished: the transformed objective
  /// is constant on the feasible region and every feasible point is
  /// optimal. The remaining fields are then unset.
  bool objective_is_constant = false;
  Vector x_next;
  /// Inner-sphere minimiser z = e - alpha r p_hat in the centred frame;
  /// ||z - e|| = alpha r and e^T z = n.
  Vector z;
  double gradient_norm = 0.0;                  // ||c_P||
  double transformed_objective_at_centre = 0.0;  // (Dc)^T e = c^T x
  double transformed_objective_at_step = 0.0;    // (Dc)^T z
};

/// One projective-scaling step. With D = diag(x), stack the scaled
/// constraint rows A D with the single row e^T, reject the scaled cost D c
/// against that row space to get the projected gradient c_P, then move from
/// the centre by alpha r along -c_P/||c_P|| and pull the step back:
///
///   B = [A D; e^T]
///   c_P = D c - B^T (B B^T)^{-1} B (D c)
///   z = e - alpha r * c_P / ||c_P||
///   x_next = n D z / (e^T D z)
///
/// The e^T row keeps sum p_i = 0, so z stays on the simplex; alpha r < 1
/// keeps z (hence x_next) strictly positive.
inline StepResult iterate_once(const Problem& problem, const Vector& x,
                               const SimplexGeometry& geometry,
                               double tol_gradient = 1e-12) {
  const std::size_t n = problem.dimension();
  const std::size_t m = problem.constraint_count();
  if (x.size() != n) {
    throw DimensionMismatch("iterate_once: x has wrong length");
  }
  for (double xi : x) {
    if (!(xi > 0.0)) {
      throw DomainError("iterate_once: x must be strictly interior");
    }
  }

  const Matrix& A = problem.constraints();
  Matrix B(m + 1, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = A(i, j) * x[j];
  for (std::size_t j = 0; j < n; ++j) B(m, j) = 1.0;

  Vector scaled_cost(n);
  for (std::size_t j = 0; j < n; ++j) scaled_cost[j] = problem.cost()[j] * x[j];

  Vector c_p;
  try {
    const ProjectionBasis basis = ProjectionBasis::build(std::move(B));
    c_p = reject(basis, scaled_cost);
  } catch (const RankDeficient& e) {
    throw NumericalBreakdown(std::string("iterate_once: scaled constraints "
                                         "lost rank: ") +
                             e.what());
  }

  StepResult result;
  const double gradient_norm = norm2(c_p);
  if (gradient_norm <= tol_gradient * norm2(scaled_cost)) {
    result.objective_is_constant = true;
    return result;
  }

  const double step = geometry.alpha * geometry.r;
  Vector z(n);
  for (std::size_t j = 0; j < n; ++j)
    z[j] = 1.0 - step * c_p[j] / gradient_norm;

  Vector dz(n);
  for (std::size_t j = 0; j < n; ++j) dz[j] = x[j] * z[j];
  const double denom = sum(dz);
  if (!(denom > 0.0)) {
    throw NumericalBreakdown("iterate_once: e^T D z <= 0");
  }

  result.x_next.resize(n);
  const double nd = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) result.x_next[j] = nd * dz[j] / denom;
  result.z = std::move(z);
  result.gradient_norm = gradient_norm;
  result.transformed_objective_at_centre = sum(scaled_cost);
  result.transformed_objective_at_step = dot(scaled_cost, result.z);
  return result;
}

/// Run the algorithm from the centre e until c^T x < epsilon.
///
/// Nontrivial instances stop as Converged within the theoretical bound;
/// c^T e = 0 instances are trivially optimal at the centre; a vanished
/// projected gradient reports a constant objective; the iteration cap
/// (four times the bound, by default) converts numeric pathologies into a
/// diagnosable IterationLimit instead of a hang. A NumericalBreakdown in a
/// step is returned as a status with the trace collected so far.
inline SolveResult solve(const Problem& problem, const SolverConfig& config) {
  const std::size_t n = problem.dimension();
  SimplexGeometry geometry = SimplexGeometry::for_dimension(n);
  if (config.alpha_override) {
    geometry = geometry.with_alpha(*config.alpha_override);
  }
  if (!(config.epsilon > 0.0)) {
    throw DomainError("solve: epsilon must be > 0");
  }

  SolveResult result;
  result.final_x = ones(n);

  const double c_dot_e = problem.cost_at_centre();
  if (c_dot_e <= config.tol_feas) {
    result.status = SolveStatus::TrivialCentreOptimal;
    return result;
  }

  result.theoretical_bound = iteration_bound(n, c_dot_e, config.epsilon);
  const std::int64_t max_iterations =
      config.max_iterations > 0
          ? config.max_iterations
          : std::max<std::int64_t>(4 * result.theoretical_bound, 1);

  const double guaranteed_decrease = psi(1.0);
  Vector x = ones(n);
  double phi_prev = phi(problem.cost(), x).phi;

  while (true) {
    const double objective = dot(problem.cost(), x);
    if (objective < config.epsilon) {
      result.status = SolveStatus::Converged;
      break;
    }
    if (result.iterations >= max_iterations) {
      result.status = SolveStatus::IterationLimit;
      break;
    }

    StepResult step;
    try {
      step = iterate_once(problem, x, geometry, config.tol_gradient);
    } catch (const NumericalBreakdown&) {
      result.status = SolveStatus::NumericalBreakdown;
      break;
    }
    if (step.objective_is_constant) {
      result.status = SolveStatus::ConstantObjectiveOnFeasibleSet;
      break;
    }

    x = step.x_next;
    ++result.iterations;

    IterationRecord record;
    record.k = result.iterations;
    record.objective = dot(problem.cost(), x);
    record.projected_gradient_norm = step.gradient_norm;
    record.min_coordinate = *std::min_element(x.begin(), x.end());
    if (record.min_coordinate <= config.tol_interior) {
      // alpha r < 1 keeps iterates interior in exact arithmetic; a
      // collapsed coordinate means the scaling has been destroyed by
      // rounding and further steps are meaningless.
      result.status = SolveStatus::NumericalBreakdown;
      break;
    }
    record.transformed_objective_at_centre =
        step.transformed_objective_at_centre;
    record.transformed_objective_at_step = step.transformed_objective_at_step;

    if (record.objective <= 0.0) {
      // Rounding carried c^T x to or past the optimum 0: accuracy exceeds
      // any positive epsilon, so this is convergence. The potential is
      // undefined here.
      record.phi = std::numeric_limits<double>::quiet_NaN();
      record.delta_phi = std::numeric_limits<double>::quiet_NaN();
      record.x = x;
      if (config.trace_enabled) result.trace.push_back(std::move(record));
      result.status = SolveStatus::Converged;
      break;
    }

    const PotentialValue pv = phi(problem.cost(), x);
    record.phi = pv.phi;
    record.delta_phi = phi_prev - pv.phi;
    record.below_guaranteed_decrease =
        record.delta_phi < guaranteed_decrease - 1e-3;
    phi_prev = pv.phi;
    record.x = x;
    if (config.trace_enabled) result.trace.push_back(std::move(record));
  }

  result.final_x = x;
  return result;
}

} // namespace karmarkar
