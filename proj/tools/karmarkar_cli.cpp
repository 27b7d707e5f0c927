// Command-line front end: validate, solve, bound, and enumerate vertices
// of problems in canonical form. All results go to stdout, diagnostics to
// stderr; numeric output is fixed at 17 significant digits so identical
// invocations produce byte-identical output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "karmarkar/karmarkar.hpp"

namespace {

using namespace karmarkar;

int run_solve(const std::string& path, double epsilon, std::int64_t max_iter,
              std::optional<double> alpha, const std::string& trace_path,
              bool as_json) {
  const Problem problem = load_problem(path);
  const ValidationReport report = validate(problem);
  if (!report.ok()) {
    for (const ValidationCheck& check : report.checks) {
      if (check.status == CheckStatus::Fail) {
        std::cerr << "error: validation failed: " << check.name << ": "
                  << check.detail << "\n";
      }
    }
    return 1;
  }

  SolverConfig config;
  config.epsilon = epsilon;
  config.max_iterations = max_iter;
  // solve applies the override through the alpha * r < 1 validation before
  // its first iteration; a bad value surfaces as an input error below.
  config.alpha_override = alpha;

  const SolveResult result = solve(problem, config);

  if (!trace_path.empty()) {
    std::ofstream trace_file(trace_path, std::ios::binary);
    if (!trace_file) {
      std::cerr << "error: cannot open trace file: " << trace_path << "\n";
      return 1;
    }
    write_trace_csv(trace_file, result.trace);
  }

  if (as_json) {
    std::cout << solve_result_to_json(problem, result).dump(2) << "\n";
  } else {
    std::cout << "status: " << to_string(result.status) << "\n"
              << "iterations: " << result.iterations << "\n"
              << "theoretical_bound: " << result.theoretical_bound << "\n"
              << "final_objective: "
              << format_double(dot(problem.cost(), result.final_x)) << "\n"
              << "final_x: " << format_vector(result.final_x) << "\n";
  }
  return exit_code_for(result.status);
}

int run_check(const std::string& path) {
  const Problem problem = load_problem(path);
  const ValidationReport report = validate(problem);
  for (const ValidationCheck& check : report.checks) {
    const char* verdict = "PASS";
    if (check.status == CheckStatus::Fail) verdict = "FAIL";
    // Only the enumeration oracle can decide the zero-optimum assumption.
    if (check.status == CheckStatus::Unverified) verdict = "UNVERIFIED-HERE";
    std::cout << "check " << check.name << ": " << verdict;
    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
  }
  std::cout << "validation: " << (report.ok() ? "ok" : "failed") << "\n";
  return report.ok() ? 0 : 1;
}

int run_bound(const std::string& path, double epsilon) {
  const Problem problem = load_problem(path);
  const std::size_t n = problem.dimension();
  const SimplexGeometry geometry = SimplexGeometry::for_dimension(n);
  const double c_dot_e = problem.cost_at_centre();
  if (!(c_dot_e > 0.0)) {
    std::cerr << "error: c^T e must be positive for the bound (got "
              << format_double(c_dot_e) << ")\n";
    return 1;
  }
  std::cout << "n: " << n << "\n"
            << "c_dot_e: " << format_double(c_dot_e) << "\n"
            << "R: " << format_double(geometry.R) << "\n"
            << "r: " << format_double(geometry.r) << "\n"
            << "alpha: " << format_double(geometry.alpha) << "\n"
            << "psi_one: " << format_double(psi(1.0)) << "\n"
            << "bound: " << iteration_bound(n, c_dot_e, epsilon) << "\n";
  return 0;
}

int run_vertices(const std::string& path, bool with_cost) {
  const Problem problem = load_problem(path);
  const VertexSet vs = enumerate_vertices(problem);
  std::cout << vertex_set_to_json(vs, with_cost).dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective-scaling interior-point solver for linear programs "
               "in canonical form: min c^T x s.t. Ax = 0, e^T x = n, x >= 0"};
  app.require_subcommand(1);

  std::string path;
  double epsilon = 1e-6;
  std::int64_t max_iter = 0;
  std::optional<double> alpha;
  std::string trace_path;
  bool as_json = false;
  bool with_cost = false;

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Run the solver on a problem file");
  solve_cmd->add_option("input", path, "Problem JSON file")->required();
  solve_cmd->add_option("--epsilon", epsilon,
                        "Objective stopping threshold (default 1e-6)");
  solve_cmd->add_option("--max-iter", max_iter,
                        "Iteration cap; 0 means 4 x theoretical bound");
  solve_cmd->add_option("--alpha", alpha,
                        "Step fraction override (must satisfy alpha*r < 1)");
  solve_cmd->add_option("--trace", trace_path, "Write per-iteration CSV here");
  solve_cmd->add_flag("--json", as_json, "Emit the result as JSON");

  CLI::App* check_cmd =
      app.add_subcommand("check", "Validate a problem file's assumptions");
  check_cmd->add_option("input", path, "Problem JSON file")->required();

  CLI::App* bound_cmd = app.add_subcommand(
      "bound", "Print geometry constants and the iteration bound");
  bound_cmd->add_option("input", path, "Problem JSON file")->required();
  bound_cmd->add_option("--epsilon", epsilon,
                        "Objective stopping threshold (default 1e-6)");

  CLI::App* vertices_cmd = app.add_subcommand(
      "vertices", "Enumerate all vertices of the feasible polytope");
  vertices_cmd->add_option("input", path, "Problem JSON file")->required();
  vertices_cmd->add_flag("--cost", with_cost,
                         "Also report the exact optimum of c^T x");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      return run_solve(path, epsilon, max_iter, alpha, trace_path, as_json);
    }
    if (check_cmd->parsed()) return run_check(path);
    if (bound_cmd->parsed()) return run_bound(path, epsilon);
    if (vertices_cmd->parsed()) return run_vertices(path, with_cost);
  } catch (const karmarkar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
