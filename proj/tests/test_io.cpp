#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include "karmarkar/io.hpp"
#include "karmarkar/errors.hpp"

using namespace karmarkar;

namespace {

const char* kCanonicalText = R"({
  "n": 3,
  "m": 1,
  "A": [[1, 1, -2]],
  "c": [1, 0, 0],
  "comment": "canonical"
})";

} // namespace

TEST_CASE("doubles render with 17 significant digits and round-trip") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.5) == "-2.5");

  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> uniform(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = uniform(rng);
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
  CHECK(format_vector({1.0, 0.5, -2.0}) == "1 0.5 -2");
}

TEST_CASE("problem parsing accepts the documented format") {
  const Problem p = parse_problem_text(kCanonicalText);
  CHECK(p.dimension() == 3);
  CHECK(p.constraint_count() == 1);
  CHECK(p.constraints()(0, 2) == -2.0);
  CHECK(p.cost()[0] == 1.0);

  SECTION("field order is irrelevant and extras are ignored") {
    const Problem q = parse_problem_text(
        R"({"c": [1, 0, 0], "A": [[1, 1, -2]], "m": 1, "n": 3, "extra": 7})");
    CHECK(q.dimension() == 3);
  }
  SECTION("empty A with m = 0") {
    const Problem q =
        parse_problem_text(R"({"n": 3, "m": 0, "A": [], "c": [1, 2, 3]})");
    CHECK(q.constraint_count() == 0);
  }
}

TEST_CASE("problem parsing identifies the offending field") {
  const auto message_of = [](const std::string& text) -> std::string {
    try {
      parse_problem_text(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };

  CHECK(message_of(R"({"m":1,"A":[[1,1,-2]],"c":[1,0,0]})").find("\"n\"") !=
        std::string::npos);
  CHECK(message_of(R"({"n":3,"A":[[1,1,-2]],"c":[1,0,0]})").find("\"m\"") !=
        std::string::npos);
  CHECK(message_of(R"({"n":3,"m":1,"c":[1,0,0]})").find("\"A\"") !=
        std::string::npos);
  CHECK(message_of(R"({"n":3,"m":1,"A":[[1,1,-2]]})").find("\"c\"") !=
        std::string::npos);
  CHECK(message_of(R"({"n":1.5,"m":1,"A":[[1,1,-2]],"c":[1,0,0]})")
            .find("\"n\"") != std::string::npos);
  CHECK(message_of(R"({"n":3,"m":2,"A":[[1,1,-2]],"c":[1,0,0]})")
            .find("\"A\"") != std::string::npos);
  CHECK(message_of(R"({"n":3,"m":1,"A":[[1,1]],"c":[1,0,0]})")
            .find("\"A\" row 0") != std::string::npos);
  CHECK(message_of(R"({"n":3,"m":1,"A":[[1,1,-2]],"c":[1,0]})")
            .find("\"c\"") != std::string::npos);
  CHECK(message_of(R"({"n":3,"m":1,"A":[[1,"x",-2]],"c":[1,0,0]})")
            .find("\"A\" row 0 entry 1") != std::string::npos);
  CHECK(message_of(R"({"n":3,"m":1,"A":[[1,1,-2]],"c":[1,0,0],"comment":4})")
            .find("\"comment\"") != std::string::npos);
  CHECK(message_of(R"({"n":0,"m":0,"A":[],"c":[]})").find("\"n\"") !=
        std::string::npos);
  CHECK_FALSE(message_of("{not json").empty());
  CHECK_FALSE(message_of(R"([1, 2, 3])").empty());
  // Too many constraint rows for the dimension.
  CHECK_FALSE(
      message_of(
          R"({"n":3,"m":2,"A":[[1,-1,0],[0,1,-1]],"c":[1,0,0]})")
          .empty());
}

TEST_CASE("nonfinite entries are rejected") {
  nlohmann::json doc = nlohmann::json::parse(kCanonicalText);
  doc["c"][1] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(parse_problem(doc), ParseError);
  doc = nlohmann::json::parse(kCanonicalText);
  doc["A"][0][0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(parse_problem(doc), ParseError);
}

TEST_CASE("problem serialization round-trips") {
  const Problem p = parse_problem_text(kCanonicalText);
  const Problem q = parse_problem(problem_to_json(p));
  CHECK(q.dimension() == p.dimension());
  CHECK(q.constraints().data() == p.constraints().data());
  CHECK(q.cost() == p.cost());
}

TEST_CASE("missing input file") {
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), ParseError);
}

TEST_CASE("trace CSV is pinned byte for byte") {
  IterationRecord first;
  first.k = 1;
  first.objective = 0.5;
  first.phi = -1.0;
  first.delta_phi = 1.0;
  first.projected_gradient_norm = 0.25;
  first.min_coordinate = 0.125;
  IterationRecord second = first;
  second.k = 2;
  second.objective = 0.1;

  const std::string csv = trace_to_csv({first, second});
  CHECK(csv ==
        "iter,objective,phi,delta_phi,projected_gradient_norm,min_coordinate\n"
        "1,0.5,-1,1,0.25,0.125\n"
        "2,0.10000000000000001,-1,1,0.25,0.125\n");

  CHECK(trace_to_csv({}) ==
        "iter,objective,phi,delta_phi,projected_gradient_norm,min_coordinate\n");
}

TEST_CASE("exit codes follow the status table") {
  CHECK(exit_code_for(SolveStatus::Converged) == 0);
  CHECK(exit_code_for(SolveStatus::TrivialCentreOptimal) == 0);
  CHECK(exit_code_for(SolveStatus::IterationLimit) == 2);
  CHECK(exit_code_for(SolveStatus::ConstantObjectiveOnFeasibleSet) == 3);
  CHECK(exit_code_for(SolveStatus::NumericalBreakdown) == 4);
}

TEST_CASE("result serialization carries the solve summary") {
  const Problem p = parse_problem_text(kCanonicalText);
  const SolveResult result = solve(p, SolverConfig{});
  const nlohmann::json doc = solve_result_to_json(p, result);
  CHECK(doc["status"] == "Converged");
  CHECK(doc["iterations"].get<std::int64_t>() == result.iterations);
  CHECK(doc["theoretical_bound"].get<std::int64_t>() == 136);
  CHECK(doc["final_x"].size() == 3);
  CHECK(doc["final_objective"].get<double>() < 1e-6);
}

TEST_CASE("vertex sets serialize with and without the optimum") {
  const Problem p = parse_problem_text(kCanonicalText);
  const VertexSet vs = enumerate_vertices(p);
  const nlohmann::json bare = vertex_set_to_json(vs, false);
  CHECK(bare["count"] == 2);
  CHECK(bare["vertices"].size() == 2);
  CHECK_FALSE(bare.contains("optimum_value"));
  const nlohmann::json full = vertex_set_to_json(vs, true);
  CHECK(full["optimum_value"].get<double>() == 0.0);
  CHECK(full["optimum_vertex"].size() == 3);
}
