// Copyright 2026 The embising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch_amalgamated.hpp>

#include <sstream>

#include "embising/cuts.hpp"
#include "embising/error.hpp"
#include "embising/lp.hpp"
#include "embising/random.hpp"
#include "embising/simplex.hpp"

namespace embising {
namespace {

using Catch::Approx;

LinearProgram make_lp(std::size_t n, std::vector<double> objective,
                      std::vector<LinearConstraint> rows) {
  LinearProgram lp;
  for (std::size_t j = 0; j < n; ++j) lp.variables.push_back("x" + std::to_string(j));
  lp.objective = std::move(objective);
  lp.constraints = std::move(rows);
  return lp;
}

LinearConstraint ge(std::vector<std::pair<std::size_t, double>> terms, double rhs) {
  return {std::move(terms), Relation::kGreaterEqual, rhs, ""};
}

LinearConstraint eq(std::vector<std::pair<std::size_t, double>> terms, double rhs) {
  return {std::move(terms), Relation::kEqual, rhs, ""};
}

void check_duality(const LinearProgram& lp, const LpSolution& sol) {
  REQUIRE(sol.row_duals.size() == lp.num_constraints());
  double dual_objective = 0.0;
  std::vector<double> reduced(lp.objective);
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    const auto& row = lp.constraints[i];
    if (row.relation == Relation::kGreaterEqual) CHECK(sol.row_duals[i] >= -1e-9);
    dual_objective += sol.row_duals[i] * row.rhs;
    for (const auto& [j, a] : row.terms) reduced[j] -= sol.row_duals[i] * a;
    // Complementary slackness.
    CHECK(sol.row_duals[i] * (row.activity(sol.x) - row.rhs) == Approx(0.0).margin(1e-8));
  }
  for (double r : reduced) CHECK(r == Approx(0.0).margin(1e-9));
  CHECK(dual_objective == Approx(sol.objective).margin(1e-9));
}

TEST_CASE("solve_simplex on small programs", "[simplex]") {
  for (auto rule : {PivotRule::kBland, PivotRule::kDantzig}) {
    SimplexOptions options;
    options.rule = rule;

    SECTION("equality and bound") {
      const auto lp = make_lp(2, {1.0, 0.0},
                              {ge({{0, 1.0}}, 1.0), eq({{0, 1.0}, {1, 1.0}}, 3.0)});
      const auto sol = solve_simplex(lp, options);
      REQUIRE(sol.status == LpStatus::kOptimal);
      CHECK(sol.objective == Approx(1.0));
      CHECK(sol.x[0] == Approx(1.0));
      CHECK(sol.x[1] == Approx(2.0));
      check_duality(lp, sol);
    }
    SECTION("infeasible") {
      const auto lp = make_lp(1, {1.0}, {ge({{0, 1.0}}, 1.0), ge({{0, -1.0}}, 0.0)});
      CHECK(solve_simplex(lp, options).status == LpStatus::kInfeasible);
    }
    SECTION("unbounded") {
      const auto lp = make_lp(2, {1.0, 0.0}, {ge({{0, 1.0}, {1, 1.0}}, 0.0)});
      CHECK(solve_simplex(lp, options).status == LpStatus::kUnbounded);
    }
    SECTION("Beale's cycling example") {
      // min -3/4 x0 + 150 x1 - 1/50 x2 + 6 x3 over x >= 0 with three rows.
      const auto lp = make_lp(
          4, {-0.75, 150.0, -0.02, 6.0},
          {ge({{0, -0.25}, {1, 60.0}, {2, 0.04}, {3, -9.0}}, 0.0),
           ge({{0, -0.5}, {1, 90.0}, {2, 0.02}, {3, -3.0}}, 0.0), ge({{2, -1.0}}, -1.0),
           ge({{0, 1.0}}, 0.0), ge({{1, 1.0}}, 0.0), ge({{2, 1.0}}, 0.0), ge({{3, 1.0}}, 0.0)});
      const auto sol = solve_simplex(lp, options);
      REQUIRE(sol.status == LpStatus::kOptimal);
      CHECK(sol.objective == Approx(-0.05));
      CHECK(sol.x[0] == Approx(0.04));
      CHECK(sol.x[2] == Approx(1.0));
      check_duality(lp, sol);
    }
  }
}

TEST_CASE("LinearProgram::check", "[simplex]") {
  CHECK_THROWS_AS(make_lp(1, {1.0}, {ge({{3, 1.0}}, 0.0)}).check(), DomainError);
  CHECK_THROWS_AS(make_lp(1, {1.0}, {ge({{0, NAN}}, 0.0)}).check(), DomainError);
  CHECK_NOTHROW(make_lp(1, {1.0}, {ge({{0, 1.0}}, 0.0)}).check());
}

TEST_CASE("write_lp_format", "[simplex]") {
  auto lp = make_lp(2, {1.0, 0.0}, {ge({{0, 2.0}, {1, -1.0}}, 0.5), eq({{1, 1.0}}, 3.0)});
  lp.variables = {"theta", "omega[a]"};
  lp.constraints[0].label = "cut 0";
  std::ostringstream out;
  write_lp_format(out, lp);
  const auto text = out.str();
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("Minimize"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("c0: 2 x0 - 1 x1 >= 0.5"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("c1: 1 x1 = 3"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("x0 free"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("theta"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("End"));
}

TEST_CASE("weight LPs: both pivot rules, both coordinate systems", "[simplex][property]") {
  Rng rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const auto g = trial % 2 ? random_tree(n, rng) : random_connected_graph(n, 0.3, rng);
    const auto inst = random_instance(g, rng, trial % 3 ? 0.1 : 1.0);
    const auto lp = build_lp(inst, connected_cuts(g));

    const auto direct = solve_simplex(lp);
    REQUIRE(direct.status == LpStatus::kOptimal);
    check_duality(lp, direct);

    SimplexOptions dantzig;
    dantzig.rule = PivotRule::kDantzig;
    dantzig.refactor_interval = 7;
    const auto other = solve_simplex(lp, dantzig);
    REQUIRE(other.status == LpStatus::kOptimal);
    CHECK(other.objective == Approx(direct.objective).margin(1e-9));

    const auto subtree = solve_simplex(to_subtree_coordinates(lp, g));
    REQUIRE(subtree.status == LpStatus::kOptimal);
    CHECK(subtree.objective == Approx(direct.objective).margin(1e-9));
    const auto omega = from_subtree_coordinates(subtree.x, g);
    std::vector<double> x{subtree.x[0]};
    x.insert(x.end(), omega.begin(), omega.end());
    for (const auto& row : lp.constraints) {
      const double slack = row.activity(x) - row.rhs;
      if (row.relation == Relation::kEqual) {
        CHECK(slack == Approx(0.0).margin(1e-9));
      } else {
        CHECK(slack >= -1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace embising
