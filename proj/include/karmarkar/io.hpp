#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "karmarkar/errors.hpp"
#include "karmarkar/linalg.hpp"
#include "karmarkar/oracle.hpp"
#include "karmarkar/problem.hpp"
#include "karmarkar/solver.hpp"

namespace karmarkar {

/// Fixed 17-significant-digit decimal rendering. 17 digits round-trip any
/// double, so equal values format identically and output is reproducible
/// byte for byte.
inline std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return std::string(buffer);
}

inline std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_double(v[i]);
  }
  return out;
}

namespace detail {

inline double finite_number_at(const nlohmann::json& value,
                               const std::string& where) {
  if (!value.is_number()) {
    throw ParseError("field " + where + ": expected a number");
  }
  const double d = value.get<double>();
  if (!std::isfinite(d)) {
    throw ParseError("field " + where + ": value is not finite");
  }
  return d;
}

} // namespace detail

/// Parse a problem from its JSON document form:
///
///   {"n": <int>, "m": <int>, "A": [[row floats]...], "c": [floats],
///    "comment": optional string}
///
/// Field order is irrelevant. NaN/Inf entries and dimension mismatches are
/// rejected with a message naming the offending field.
inline Problem parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ParseError("problem document: expected a JSON object");
  }
  for (const char* field : {"n", "m", "A", "c"}) {
    if (!doc.contains(field)) {
      throw ParseError(std::string("field \"") + field + "\": missing");
    }
  }

  if (!doc["n"].is_number_integer()) {
    throw ParseError("field \"n\": expected an integer");
  }
  if (!doc["m"].is_number_integer()) {
    throw ParseError("field \"m\": expected an integer");
  }
  const auto n_raw = doc["n"].get<std::int64_t>();
  const auto m_raw = doc["m"].get<std::int64_t>();
  if (n_raw < 2) {
    throw ParseError("field \"n\": must be at least 2");
  }
  if (m_raw < 0) {
    throw ParseError("field \"m\": must be nonnegative");
  }
  const auto n = static_cast<std::size_t>(n_raw);
  const auto m = static_cast<std::size_t>(m_raw);

  const nlohmann::json& a_doc = doc["A"];
  if (!a_doc.is_array() || a_doc.size() != m) {
    throw ParseError("field \"A\": expected " + std::to_string(m) + " rows");
  }
  Matrix A(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const nlohmann::json& row = a_doc[i];
    const std::string row_name = "\"A\" row " + std::to_string(i);
    if (!row.is_array() || row.size() != n) {
      throw ParseError("field " + row_name + ": expected " +
                       std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      A(i, j) = detail::finite_number_at(
          row[j], row_name + " entry " + std::to_string(j));
    }
  }

  const nlohmann::json& c_doc = doc["c"];
  if (!c_doc.is_array() || c_doc.size() != n) {
    throw ParseError("field \"c\": expected " + std::to_string(n) + " entries");
  }
  Vector c(n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = detail::finite_number_at(c_doc[j],
                                    "\"c\" entry " + std::to_string(j));
  }

  if (doc.contains("comment") && !doc["comment"].is_string()) {
    throw ParseError("field \"comment\": expected a string");
  }

  try {
    return Problem(std::move(A), std::move(c));
  } catch (const Error& e) {
    throw ParseError(std::string("problem document: ") + e.what());
  }
}

inline Problem parse_problem_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON syntax: ") + e.what());
  }
  return parse_problem(doc);
}

inline Problem load_problem(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw ParseError("cannot open input file: " + path);
  }
  std::ostringstream text;
  text << stream.rdbuf();
  return parse_problem_text(text.str());
}

inline nlohmann::json problem_to_json(const Problem& problem) {
  nlohmann::json a_doc = nlohmann::json::array();
  const Matrix& A = problem.constraints();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(A(i, j));
    a_doc.push_back(std::move(row));
  }
  return nlohmann::json{{"n", problem.dimension()},
                        {"m", problem.constraint_count()},
                        {"A", std::move(a_doc)},
                        {"c", problem.cost()}};
}

inline constexpr const char* kTraceHeader =
    "iter,objective,phi,delta_phi,projected_gradient_norm,min_coordinate";

/// Emit the trace as CSV, one row per iteration, '\n' line endings,
/// numbers at 17 significant digits.
inline void write_trace_csv(std::ostream& out,
                            const std::vector<IterationRecord>& trace) {
  out << kTraceHeader << '\n';
  for (const IterationRecord& record : trace) {
    out << record.k << ',' << format_double(record.objective) << ','
        << format_double(record.phi) << ',' << format_double(record.delta_phi)
        << ',' << format_double(record.projected_gradient_norm) << ','
        << format_double(record.min_coordinate) << '\n';
  }
}

inline std::string trace_to_csv(const std::vector<IterationRecord>& trace) {
  std::ostringstream out;
  write_trace_csv(out, trace);
  return out.str();
}

/// Process exit code for a finished solve. Input and parse failures use
/// exit 1, outside this mapping.
inline int exit_code_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return 0;
    case SolveStatus::TrivialCentreOptimal: return 0;
    case SolveStatus::IterationLimit: return 2;
    case SolveStatus::ConstantObjectiveOnFeasibleSet: return 3;
    case SolveStatus::NumericalBreakdown: return 4;
  }
  return 4;
}

inline nlohmann::json solve_result_to_json(const Problem& problem,
                                           const SolveResult& result) {
  return nlohmann::json{
      {"status", std::string(to_string(result.status))},
      {"iterations", result.iterations},
      {"theoretical_bound", result.theoretical_bound},
      {"final_objective", dot(problem.cost(), result.final_x)},
      {"final_x", result.final_x},
  };
}

inline nlohmann::json vertex_set_to_json(const VertexSet& vs,
                                         bool include_optimum) {
  nlohmann::json doc{{"count", vs.vertices.size()},
                     {"vertices", vs.vertices}};
  if (include_optimum) {
    doc["optimum_value"] = vs.optimum_value;
    doc["optimum_vertex"] = vs.optimum_vertex;
  }
  return doc;
}

} // namespace karmarkar
