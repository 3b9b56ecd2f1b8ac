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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Library results are checked against the independent reference
// code in tests/support wherever one exists.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "embising/comparison.hpp"
#include "embising/cuts.hpp"
#include "embising/embedding.hpp"
#include "embising/io.hpp"
#include "embising/lp.hpp"
#include "embising/oracle.hpp"
#include "embising/parameter_setter.hpp"
#include "embising/preprocess.hpp"
#include "embising/random.hpp"
#include "embising/subproblem.hpp"
#include "reference.hpp"

namespace {

using namespace embising;
namespace ref = embising::testing;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first few failures so the summary line says what went wrong.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) {
      if (!first_.empty()) first_ += "; ";
      first_ += what;
    }
  }
  bool ok() const { return failures_ == 0; }
  Outcome finish(const std::string& summary) const {
    if (ok()) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

double theta_over(const SubproblemInstance& inst, const CutFamily& family) {
  return solve_weight_distribution(inst, family).theta;
}

EmbeddingFile load_embedding(const std::string& name) {
  return parse_embedding(read_file(ref::fixture_path(name)));
}

IsingModel load_problem(const std::string& name) {
  return parse_problem(read_file(ref::fixture_path(name)));
}

Outcome criterion1() {
  Checker check;
  Rng rng(1001);
  double seconds_2000 = 0.0;
  for (std::size_t n : {5, 50, 500, 2000}) {
    auto inst = random_instance(random_tree(n, rng), rng, 0.5);
    const auto family = tree_edge_cuts(inst.graph);
    const auto lp = build_lp(inst, family);
    const std::size_t expected = (2 * n - 2) + 1 + 2 * n;
    check.expect(lp.num_constraints() == expected,
                 "n=" + std::to_string(n) + " has " +
                     std::to_string(lp.num_constraints()) + " rows");
    const auto start = std::chrono::steady_clock::now();
    const auto solution = solve_weight_distribution(inst, family);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n == 2000) seconds_2000 = seconds;
    if (n <= 500) {
      const double expect_theta = ref::tree_theta_reference(inst);
      check.expect(close(solution.theta, expect_theta, 1e-6),
                   "n=" + std::to_string(n) + " theta " + fmt(solution.theta) +
                       " vs reference " + fmt(expect_theta));
    }
  }
  check.expect(seconds_2000 < 10.0, "n=2000 took " + fmt(seconds_2000) + " s");
  return check.finish("row counts match for n in {5,50,500,2000}; n=2000 solved in " +
                      fmt(seconds_2000) + " s");
}

struct RandomCase {
  SubproblemInstance inst;
  bool tree = false;
};

std::vector<RandomCase> redundancy_cases() {
  Rng rng(2002);
  std::vector<RandomCase> cases;
  std::uniform_int_distribution<std::size_t> size(2, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const auto n = size(rng);
    const double gamma = k % 2 ? 1.0 : 0.1;
    // Every third graph is a tree so the tree family is exercised often.
    Graph g = k % 3 == 0 ? random_tree(n, rng) : random_connected_graph(n, unit(rng), rng);
    const bool tree = g.num_edges() + 1 == g.num_vertices();
    cases.push_back({random_instance(std::move(g), rng, gamma), tree});
  }
  return cases;
}

Outcome criterion2(const std::vector<RandomCase>& cases) {
  Checker check;
  int trees = 0, dense_checked = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& inst = cases[k].inst;
    const auto id = "case " + std::to_string(k);
    const double all = theta_over(inst, all_subsets(inst.graph));
    const double connected = theta_over(inst, connected_cuts(inst.graph));
    check.expect(close(all, connected, 1e-6),
                 id + ": all " + fmt(all) + " vs connected " + fmt(connected));
    check.expect(ref::as_family(connected_cuts(inst.graph), inst.graph) ==
                     ref::filtered_connected_cuts(inst.graph),
                 id + ": connected family differs from the filtered reference");
    if (cases[k].tree) {
      ++trees;
      const double tree = theta_over(inst, tree_edge_cuts(inst.graph));
      check.expect(close(all, tree, 1e-6), id + ": all " + fmt(all) + " vs tree " + fmt(tree));
    }
    if (inst.graph.num_vertices() <= 8) {
      const auto dense = ref::dense_theta_reference(inst, false);
      check.expect(dense && close(*dense, all, 1e-6),
                   id + ": dense reference " + (dense ? fmt(*dense) : "none") + " vs " +
                       fmt(all));
      ++dense_checked;
    }
  }
  return check.finish(std::to_string(cases.size()) + " graphs (" + std::to_string(trees) +
                      " trees), all/connected/tree optima agree within 1e-6; " +
                      std::to_string(dense_checked) + " also match a dense reference LP");
}

Outcome criterion3(const std::vector<RandomCase>& cases) {
  Checker check;
  int checked = 0, witnesses = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& inst = cases[k].inst;
    if (!cases[k].tree || inst.graph.num_vertices() > 8) continue;
    ++checked;
    const auto id = "case " + std::to_string(k);
    const auto solution = solve_weight_distribution(inst, tree_edge_cuts(inst.graph));
    const auto report =
        verify_sufficiency(inst, solution.theta, solution.omega, 2.0 * inst.gamma);
    check.expect(report.pass, id + ": margin " + fmt(report.worst_margin));
    const double naive = ref::naive_worst_margin(inst, solution.theta, solution.omega);
    check.expect(naive >= 2.0 * inst.gamma - 1e-9,
                 id + ": reference margin " + fmt(naive));
    if (!solution.tight_cuts.empty()) {
      const auto lowered = verify_sufficiency(inst, solution.theta - 1e-3, solution.omega,
                                              2.0 * inst.gamma);
      check.expect(!lowered.pass && !lowered.witness_r.empty(),
                   id + ": theta - 1e-3 still passes");
      if (!lowered.pass) ++witnesses;
    }
  }
  check.expect(checked > 0 && witnesses > 0, "no tree instance with a tight cut");
  return check.finish(std::to_string(checked) + " trees pass with raw gap 2*gamma; " +
                      std::to_string(witnesses) + " lowered-theta runs give failure witnesses");
}

// Independent end-to-end check by plain enumeration of both models.
void check_equivalence(Checker& check, const EmbeddedIsingModel& e, const std::string& id) {
  const auto original = ref::naive_minimum(e.original);
  const auto embedded = ref::naive_minimum(e.model);
  check.expect(close(embedded.value + e.offset, original.value, 1e-6),
               id + ": embedded " + fmt(embedded.value) + " + c " + fmt(e.offset) +
                   " vs original " + fmt(original.value));
  const auto& h = e.model.graph();
  const auto& g = e.original.graph();
  for (const auto& spins : embedded.minimizers) {
    std::vector<int> image(g.num_vertices());
    bool synchronized = true;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      const auto& chain = e.embedding.chain(g.vertex(v));
      image[v] = spins[h.index(chain.front())];
      for (const auto& q : chain) synchronized = synchronized && spins[h.index(q)] == image[v];
    }
    check.expect(synchronized, id + ": unsynchronized embedded minimizer");
    check.expect(!synchronized || original.minimizers.count(image) == 1,
                 id + ": de-embedded minimizer is not an original minimizer");
  }
  const auto lib = verify_equivalence(e);
  check.expect(lib.pass, id + ": verify_equivalence fails");
}

Outcome criterion4() {
  Checker check;
  const ParameterOptions options{.gamma = 0.5};
  int cases = 0;
  for (const auto& [problem, embedding] :
       {std::pair{"k3_problem.json", "k3_c4_embedding.json"},
        std::pair{"chain_problem.json", "chain_embedding.json"},
        std::pair{"hub_problem.json", "hub_embedding.json"}}) {
    const auto file = load_embedding(embedding);
    const auto e = set_parameters(load_problem(problem), file.hardware, file.embedding, options);
    check_equivalence(check, e, problem);
    ++cases;
  }
  Rng rng(4004);
  for (int k = 0; k < 100; ++k) {
    const auto c = ref::random_embedded_case(rng, 5, 3, 12);
    ParameterOptions random_options;
    random_options.gamma = k % 2 ? 0.25 : 1.0;
    random_options.strategy = k % 4 < 2 ? OuterStrategy::kUniformSplit : OuterStrategy::kSingleEdge;
    const auto e = set_parameters(c.model, c.hardware, c.embedding, random_options);
    check_equivalence(check, e, "random " + std::to_string(k));
    ++cases;
  }
  return check.finish(std::to_string(cases) +
                      " embedded models (3 fixtures + 100 random, hardware <= 12): minima agree "
                      "with offset, all minimizers synchronized and de-embed to original minimizers");
}

Outcome criterion5() {
  Checker check;
  const auto file = load_embedding("k3_c4_embedding.json");
  const auto e = set_parameters(load_problem("k3_problem.json"), file.hardware, file.embedding,
                                ParameterOptions{.gamma = 0.5});
  const auto& w = e.per_vertex.at("w");
  check.expect(std::abs(w.theta - 1.5) <= 1e-9, "theta_w " + fmt(w.theta));
  check.expect(std::abs(w.omega.at("p3")) <= 1e-9 && std::abs(w.omega.at("p4")) <= 1e-9,
               "omega not zero");
  check.expect(std::abs(e.offset - 1.5) <= 1e-9, "c " + fmt(e.offset));
  const double cmax = c_max(e.model);
  check.expect(std::abs(cmax - 1.5) <= 1e-9, "C_max " + fmt(cmax));
  const auto gap = verify_solution_gap(e);
  check.expect(gap.pass && std::abs(gap.worst_margin - 1.0) <= 1e-9,
               "worst margin " + fmt(gap.worst_margin));
  const auto* wv = [&]() -> const VertexSufficiency* {
    for (const auto& v : gap.vertices) {
      if (v.vertex == "w") return &v;
    }
    return nullptr;
  }();
  check.expect(wv != nullptr, "no report for w");
  if (wv != nullptr) {
    const auto inst = extract_instance("w", build_embedded_structure(e.original.graph(),
                                                                     file.hardware, file.embedding),
                                       assign_outer_strengths(build_embedded_structure(
                                                                  e.original.graph(), file.hardware,
                                                                  file.embedding),
                                                              e.original),
                                       e.original, 0.5);
    const double naive = ref::naive_worst_margin(inst, w.theta, {0.0, 0.0});
    check.expect(std::abs(naive - 1.0) <= 1e-9, "reference margin " + fmt(naive));
  }
  return check.finish("theta_w=" + fmt(w.theta) + ", omega=(0,0), c=" + fmt(e.offset) +
                      ", C_max=" + fmt(cmax) + ", worst margin=" + fmt(gap.worst_margin));
}

Outcome criterion6() {
  Checker check;
  Rng rng(6006);
  std::uniform_int_distribution<std::size_t> size(2, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t total_fixed = 0;
  for (int k = 0; k < 100; ++k) {
    const auto id = "model " + std::to_string(k);
    auto model = random_model(random_connected_graph(size(rng), unit(rng), rng), rng);
    const auto& g = model.graph();
    auto weights = model.weights();
    // Force one or two vertices to dominate their neighbourhood, sometimes
    // with equality.
    const int forced = 1 + static_cast<int>(rng() % 2);
    for (int f = 0; f < forced; ++f) {
      const auto v = rng() % g.num_vertices();
      double incident = 0.0;
      for (auto e : g.incident_edges(v)) incident += std::abs(model.strengths()[e]);
      const double excess = k % 5 == 0 ? 0.0 : unit(rng);
      weights[v] = (rng() % 2 ? 1.0 : -1.0) * (incident + excess);
    }
    model = IsingModel(g, weights, model.strengths());
    if (preprocessable_vertices(model).empty()) {
      check.expect(false, id + ": generator produced no preprocessable vertex");
      continue;
    }

    const auto result = preprocess(model);
    check.expect(!result.fixed.empty(), id + ": nothing fixed");
    total_fixed += result.fixed.size();
    const double before = ref::naive_minimum(model).value;
    const double after = ref::naive_minimum(result.reduced).value + result.offset;
    check.expect(std::abs(before - after) <= 1e-9,
                 id + ": minimum " + fmt(before) + " vs reduced + offset " + fmt(after));

    // Replay the folds on plain maps.
    std::map<VertexId, double> w;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) w[g.vertex(i)] = weights[i];
    std::map<VertexId, std::map<VertexId, double>> adjacent;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      adjacent[g.edge(e).u][g.edge(e).v] = model.strengths()[e];
      adjacent[g.edge(e).v][g.edge(e).u] = model.strengths()[e];
    }
    for (const auto& fixed : result.fixed) {
      const double current = w.at(fixed.vertex);
      double incident = 0.0;
      for (const auto& [n, s] : adjacent[fixed.vertex]) incident += std::abs(s);
      check.expect(std::abs(current) >= incident - 1e-12,
                   id + ": " + fixed.vertex + " was not preprocessable when fixed");
      check.expect(std::abs(fixed.weight_at_fixing - current) <= 1e-12,
                   id + ": recorded weight of " + fixed.vertex + " is off");
      const int expected = current > 0.0 ? -1 : 1;
      check.expect(fixed.value == expected, id + ": " + fixed.vertex + " fixed to " +
                                                std::to_string(fixed.value));
      for (const auto& [n, s] : adjacent[fixed.vertex]) {
        w[n] += s * fixed.value;
        adjacent[n].erase(fixed.vertex);
      }
      adjacent.erase(fixed.vertex);
      w.erase(fixed.vertex);
    }
  }
  return check.finish("100 models, " + std::to_string(total_fixed) +
                      " spins fixed; offset identity holds within 1e-9 and every fixed spin is "
                      "-sign(W) at fixing time");
}

Outcome criterion7() {
  Checker check;
  Rng rng(7007);
  std::uniform_int_distribution<std::size_t> size(2, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int instances = 0;
  for (int k = 0; k < 40; ++k) {
    const auto id = "instance " + std::to_string(k);
    auto base = random_instance(random_connected_graph(size(rng), unit(rng), rng), rng, 0.5);
    const double theta = solve_weight_distribution(base).theta;
    for (double c : {0.5, 2.0, 10.0}) {
      auto scaled = base;
      for (double& s : scaled.sigma) s *= c;
      scaled.lambda *= c;
      scaled.gamma *= c;
      const double t = solve_weight_distribution(scaled).theta;
      check.expect(std::abs(t - c * theta) <= 1e-9 * std::max(1.0, std::abs(c * theta)),
                   id + ": scale " + fmt(c) + " gives " + fmt(t) + " vs " + fmt(c * theta));
    }
    double previous = -1.0;
    for (double gamma : {0.1, 0.5, 1.0, 2.0}) {
      auto g = base;
      g.gamma = gamma;
      const double t = solve_weight_distribution(g).theta;
      check.expect(t >= previous - 1e-9, id + ": theta decreases at gamma " + fmt(gamma));
      previous = t;
    }
    ++instances;
  }
  return check.finish(std::to_string(instances) +
                      " instances: theta scales linearly for c in {0.5,2,10} and is nondecreasing "
                      "in gamma");
}

Outcome criterion8() {
  Checker check;
  const double gamma = 0.5;
  const ParameterOptions options{.gamma = gamma};
  int baseline_passes = 0;
  std::string exhibited;
  for (const auto& [problem, embedding] :
       {std::pair{"k3_problem.json", "k3_c4_embedding.json"},
        std::pair{"chain_problem.json", "chain_embedding.json"},
        std::pair{"hub_problem.json", "hub_embedding.json"}}) {
    const auto file = load_embedding(embedding);
    const auto report = compare(load_problem(problem), file.hardware, file.embedding, options, 2.0);
    check.expect(report.optimal_passes, std::string(problem) + ": optimal parameters fail");
    if (report.baseline_passes) {
      ++baseline_passes;
      const double bound = 2.0 * report.c_max_original + 2.0 * gamma;
      for (const auto& row : report.rows) {
        check.expect(row.theta_optimal <= bound + 1e-9,
                     std::string(problem) + ": theta " + fmt(row.theta_optimal) + " above " +
                         fmt(bound));
      }
    } else if (report.optimal_passes) {
      exhibited = problem;
    }
  }
  check.expect(!exhibited.empty(), "no fixture where the baseline fails and the optimum passes");
  return check.finish("3 fixtures, baseline passes on " + std::to_string(baseline_passes) +
                      " with optimal theta within 2*C_max+2*gamma; " + exhibited +
                      ": baseline FAIL, optimal PASS");
}

}  // namespace

int main() {
  const auto cases = redundancy_cases();
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1,
      [&] { return criterion2(cases); },
      [&] { return criterion3(cases); },
      criterion4,
      criterion5,
      criterion6,
      criterion7,
      criterion8,
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i]();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all = all && outcome.pass;
    std::printf("criterion %zu: %s (%s)\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
