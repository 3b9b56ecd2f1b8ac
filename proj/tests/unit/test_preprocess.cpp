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

#include "embising/preprocess.hpp"
#include "embising/random.hpp"
#include "reference.hpp"

namespace embising {
namespace {

using Catch::Approx;

IsingModel star(double center_weight, std::vector<double> strengths) {
  std::vector<VertexId> ids{"v"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < strengths.size(); ++i) {
    ids.push_back("x" + std::to_string(i));
    edges.emplace_back("v", ids.back());
  }
  Graph g(ids, edges);
  std::vector<double> w(ids.size(), 0.0);
  w[g.index("v")] = center_weight;
  std::vector<double> s(g.num_edges());
  for (std::size_t i = 0; i < strengths.size(); ++i) {
    s[*g.find_edge("v", "x" + std::to_string(i))] = strengths[i];
  }
  return IsingModel(g, w, s);
}

/// Every spin assignment of `model` restricted to the reduced vertices.
template <typename F>
void for_each_completion(const IsingModel& reduced, F&& f) {
  const auto n = reduced.graph().num_vertices();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    SpinAssignment s;
    for (std::size_t i = 0; i < n; ++i) s[reduced.graph().vertex(i)] = testing::spin_of(bits, i);
    f(s);
  }
}

TEST_CASE("preprocess fixes dominated vertices", "[preprocess]") {
  SECTION("star with dominating center") {
    const auto r = preprocess(star(5.0, {1.0, -1.0, 2.0}));
    REQUIRE_FALSE(r.fixed.empty());
    CHECK(r.fixed.front().vertex == "v");
    CHECK(r.fixed.front().value == -1);
    CHECK_FALSE(r.reduced.graph().has_vertex("v"));
  }
  SECTION("nothing dominated") {
    const auto r = preprocess(star(3.0, {2.0, 2.0}));
    // The leaves carry weight 0 against strength 2 and stay too.
    CHECK(r.fixed.empty());
    CHECK(r.offset == 0.0);
    CHECK(r.reduced == star(3.0, {2.0, 2.0}));
  }
  SECTION("cascade along a chain") {
    const IsingModel chain(Graph({"a", "b"}, {{"a", "b"}}), {5.0, 0.0}, {1.0});
    const auto r = preprocess(chain);
    REQUIRE(r.fixed.size() == 2);
    CHECK(r.fixed[0].vertex == "a");
    CHECK(r.fixed[0].value == -1);
    CHECK(r.fixed[1].vertex == "b");
    CHECK(r.fixed[1].value == 1);
    CHECK(r.fixed[1].weight_at_fixing == -1.0);
    CHECK(r.offset == -6.0);
    CHECK(r.reduced.graph().num_vertices() == 0);
    CHECK(brute_force_minimum(chain).value == -6.0);
    CHECK(brute_force_minimum(chain).minimizers == std::vector<Spins>{{-1, 1}});
  }
  SECTION("equality case depends on strict") {
    const IsingModel tie(Graph({"a", "b"}, {{"a", "b"}}), {1.0, 0.5}, {-1.0});
    CHECK(preprocess(tie, true).fixed.empty());
    const auto loose = preprocess(tie, false);
    REQUIRE_FALSE(loose.fixed.empty());
    CHECK(loose.fixed.front().vertex == "a");
  }
  SECTION("isolated zero-weight vertex is fixed to +1") {
    const auto r = preprocess(IsingModel(Graph({"a"}, {}), {0.0}, {}));
    REQUIRE(r.fixed.size() == 1);
    CHECK(r.fixed[0].value == 1);
    CHECK(r.offset == 0.0);
  }
}

TEST_CASE("preprocessable_vertices", "[preprocess]") {
  CHECK(preprocessable_vertices(star(5.0, {1.0, -1.0, 2.0})) == std::vector<VertexId>{"v"});
  const IsingModel ferro(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                         {0.0, 0.0, 0.0}, {-1.0, 0.5, 2.0});
  CHECK(preprocessable_vertices(ferro).empty());
  CHECK(preprocessable_vertices(IsingModel(Graph({"a"}, {}), {0.0}, {})) ==
        std::vector<VertexId>{"a"});
}

TEST_CASE("preprocess preserves energies and optima", "[preprocess][property]") {
  Rng rng(5150);
  int with_fixings = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 10;
    const auto g = random_connected_graph(n, 0.25, rng);
    const auto model = random_model(g, rng, 3.0, 0.25, 1.0);
    for (bool strict : {false, true}) {
      const auto r = preprocess(model, strict);
      INFO("trial " << trial << " strict " << strict);
      if (!r.fixed.empty()) ++with_fixings;

      for (const auto& f : r.fixed) {
        CHECK(f.value == (f.weight_at_fixing > 0.0 ? -1 : 1));
      }
      CHECK(r.fixed.size() + r.reduced.graph().num_vertices() == n);

      const auto fixed = r.fixed_assignment();
      for_each_completion(r.reduced, [&](const SpinAssignment& s) {
        SpinAssignment full(fixed);
        full.insert(s.begin(), s.end());
        CHECK(evaluate(model, full) == Approx(evaluate(r.reduced, s) + r.offset).margin(1e-9));
      });

      const auto original = brute_force_minimum(model);
      const double reduced_value =
          r.reduced.graph().num_vertices() ? brute_force_minimum(r.reduced).value : 0.0;
      CHECK(original.value == Approx(reduced_value + r.offset).margin(1e-9));

      // Each fixing is consistent with some optimum; strict fixings with all.
      for (const auto& f : r.fixed) {
        const auto i = g.index(f.vertex);
        std::size_t agree = 0;
        for (const auto& m : original.minimizers) agree += m[i] == f.value;
        CHECK(agree > 0);
        if (strict) CHECK(agree == original.minimizers.size());
      }
      if (!strict) CHECK(preprocessable_vertices(r.reduced).empty());
    }
  }
  CHECK(with_fixings > 50);
}

}  // namespace
}  // namespace embising
