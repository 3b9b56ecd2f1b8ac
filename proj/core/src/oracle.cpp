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

#include "embising/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "embising/cuts.hpp"
#include "embising/error.hpp"
#include "embising/lp.hpp"

namespace embising {

namespace {

double reduced_energy(const Graph& g, const std::vector<double>& sigma,
                      const std::vector<double>& omega,
                      const std::vector<double>& couplings, const Spins& r,
                      const Spins& s) {
  double value = 0.0;
  for (std::size_t q = 0; q < r.size(); ++q) {
    value += (omega[q] + sigma[q] * s[q]) * r[q];
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    value += couplings[e] * r[a] * r[b];
  }
  return value;
}

double synchronized_minimum(const Graph& g, const std::vector<double>& sigma,
                            const std::vector<double>& omega,
                            const std::vector<double>& couplings,
                            const Spins& s) {
  const auto n = g.num_vertices();
  const Spins plus(n, 1), minus(n, -1);
  return std::min(reduced_energy(g, sigma, omega, couplings, plus, s),
                  reduced_energy(g, sigma, omega, couplings, minus, s));
}

std::map<VertexId, VertexId> owners(const Embedding& phi) {
  std::map<VertexId, VertexId> owner;
  for (const auto& [v, chain] : phi.chains()) {
    for (const auto& q : chain) owner.emplace(q, v);
  }
  return owner;
}

}  // namespace

SufficiencyReport verify_sufficiency(const Graph& g,
                                     const std::vector<double>& sigma,
                                     const std::vector<double>& omega,
                                     const std::vector<double>& couplings,
                                     double raw_gap, std::size_t guard) {
  const auto n = g.num_vertices();
  if (sigma.size() != n || omega.size() != n ||
      couplings.size() != g.num_edges()) {
    throw DomainError("sufficiency check inputs do not match the graph");
  }
  if (n == 0) throw DomainError("sufficiency check on an empty graph");
  if (n > guard || n > 30) {
    throw SizeError("sufficiency check limited to " + std::to_string(guard) +
                    " vertices, got " + std::to_string(n));
  }

  SufficiencyReport report;
  report.required_gap = raw_gap;
  if (n == 1) {
    report.worst_margin = std::numeric_limits<double>::infinity();
    report.pass = true;
    return report;
  }

  double coupling_total = 0.0;
  for (double b : couplings) coupling_total += b;
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t all_flipped = count - 1;

  double worst = std::numeric_limits<double>::infinity();
  Spins s(n), r(n);
  std::vector<double> h(n), local(n);
  for (std::uint64_t sbits = 0; sbits < count; ++sbits) {
    double h_total = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
      s[q] = (sbits >> q) & 1U ? -1 : 1;
      h[q] = omega[q] + sigma[q] * s[q];
      h_total += h[q];
    }
    const double base =
        std::min(h_total + coupling_total, -h_total + coupling_total);

    std::fill(r.begin(), r.end(), 1);
    std::fill(local.begin(), local.end(), 0.0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      auto [a, b] = g.endpoints(e);
      local[a] += couplings[e];
      local[b] += couplings[e];
    }
    double value = h_total + coupling_total;
    for (std::uint64_t k = 1; k < count; ++k) {
      const auto q = static_cast<std::size_t>(std::countr_zero(k));
      value -= 2.0 * r[q] * (h[q] + local[q]);
      r[q] = -r[q];
      for (auto e : g.incident_edges(q)) {
        auto [a, b] = g.endpoints(e);
        local[a == q ? b : a] += 2.0 * couplings[e] * r[q];
      }
      if ((k ^ (k >> 1)) == all_flipped) continue;
      ++report.pairs_checked;
      const double margin = value - base;
      if (margin < worst) {
        worst = margin;
        report.witness_r = r;
        report.witness_s = s;
      }
    }
  }

  // Re-evaluate the witness directly to drop accumulated rounding.
  report.worst_margin =
      reduced_energy(g, sigma, omega, couplings, report.witness_r,
                     report.witness_s) -
      synchronized_minimum(g, sigma, omega, couplings, report.witness_s);
  report.pass = report.worst_margin >= raw_gap - kOracleTolerance;
  return report;
}

SufficiencyReport verify_sufficiency(const SubproblemInstance& inst,
                                     double theta,
                                     const std::vector<double>& omega,
                                     double raw_gap, std::size_t guard) {
  std::vector<double> couplings(inst.graph.num_edges(), -theta);
  return verify_sufficiency(inst.graph, inst.sigma, omega, couplings, raw_gap,
                            guard);
}

GapReport verify_solution_gap(const EmbeddedIsingModel& embedded,
                              std::optional<double> raw_gap,
                              std::size_t guard) {
  const auto owner = owners(embedded.embedding);
  const auto& h = embedded.model.graph();
  GapReport gap;
  gap.worst_margin = std::numeric_limits<double>::infinity();

  for (const auto& [v, chain] : embedded.embedding.chains()) {
    std::vector<Edge> coupled;
    std::vector<double> couplings;
    std::vector<double> sigma(chain.size(), 0.0), omega(chain.size(), 0.0);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto q = h.index(chain[i]);
      omega[i] = embedded.model.weights()[q];
      for (auto e : h.incident_edges(q)) {
        const auto& edge = h.edge(e);
        const double strength = embedded.model.strengths()[e];
        if (owner.at(edge.u) != owner.at(edge.v)) {
          sigma[i] += std::abs(strength);
        } else if (strength != 0.0 && edge.u == chain[i]) {
          coupled.push_back(edge);
        }
      }
    }
    Graph g(chain, coupled);
    for (const auto& e : g.edges()) couplings.push_back(embedded.model.strength(e.u, e.v));

    double gamma = embedded.gamma;
    if (auto it = embedded.per_vertex.find(v); it != embedded.per_vertex.end() &&
                                                it->second.gamma > 0.0) {
      gamma = it->second.gamma;
    }
    VertexSufficiency entry{
        v, g,
        verify_sufficiency(g, sigma, omega, couplings,
                           raw_gap.value_or(2.0 * gamma), guard)};
    gap.pass = gap.pass && entry.report.pass;
    gap.worst_margin = std::min(gap.worst_margin, entry.report.worst_margin);
    gap.vertices.push_back(std::move(entry));
  }
  return gap;
}

RedundancyReport verify_redundancy(const SubproblemInstance& inst,
                                   double tolerance, std::size_t guard) {
  check_instance(inst);
  if (inst.graph.num_vertices() > guard) {
    throw SizeError("redundancy check limited to " + std::to_string(guard) +
                    " vertices");
  }
  RedundancyReport report;
  const auto all = all_subsets(inst.graph, guard);
  const auto connected = connected_cuts(inst.graph, guard);
  report.all_size = all.size();
  report.connected_size = connected.size();
  report.theta_all = solve_weight_distribution(inst, all).theta;
  report.theta_connected = solve_weight_distribution(inst, connected).theta;

  auto close = [&](double a, double b) {
    return std::abs(a - b) <= tolerance * std::max(1.0, std::abs(a));
  };
  report.equal = close(report.theta_all, report.theta_connected);
  if (inst.graph.is_tree()) {
    const auto tree = tree_edge_cuts(inst.graph);
    report.tree_size = tree.size();
    report.theta_tree = solve_weight_distribution(inst, tree).theta;
    report.equal = report.equal && close(report.theta_all, *report.theta_tree);
  }
  return report;
}

SpinAssignment synchronize(const EmbeddedIsingModel& embedded,
                           const SpinAssignment& t) {
  embedded.original.dense(t);  // domain check
  SpinAssignment s;
  for (const auto& [v, chain] : embedded.embedding.chains()) {
    const int value = t.at(v);
    for (const auto& q : chain) s.emplace(q, value);
  }
  return s;
}

bool psi(const EmbeddedIsingModel& embedded, const SpinAssignment& s) {
  embedded.model.dense(s);  // domain check
  for (const auto& [v, chain] : embedded.embedding.chains()) {
    const int first = s.at(chain.front());
    for (const auto& q : chain) {
      if (s.at(q) != first) return false;
    }
  }
  return true;
}

SpinAssignment tau(const EmbeddedIsingModel& embedded, const SpinAssignment& s) {
  if (!psi(embedded, s)) {
    throw ContractError("tau is defined only for synchronized samples");
  }
  SpinAssignment t;
  for (const auto& [v, chain] : embedded.embedding.chains()) {
    t.emplace(v, s.at(chain.front()));
  }
  return t;
}

SpinAssignment majority_vote(const EmbeddedIsingModel& embedded,
                             const SpinAssignment& s) {
  embedded.model.dense(s);  // domain check
  SpinAssignment t;
  for (const auto& [v, chain] : embedded.embedding.chains()) {
    int total = 0;
    for (const auto& q : chain) total += s.at(q);
    t.emplace(v, total >= 0 ? 1 : -1);
  }
  return t;
}

EquivalenceReport verify_equivalence(const EmbeddedIsingModel& embedded,
                                     double tolerance, std::size_t guard) {
  BruteForceOptions options;
  options.max_vertices = guard;
  const auto original = brute_force_minimum(embedded.original, options);
  const auto emb = brute_force_minimum(embedded.model, options);

  EquivalenceReport report;
  report.original_minimum = original.value;
  report.embedded_minimum = emb.value;
  report.offset = embedded.offset;
  report.embedded_minimizers = emb.num_minimizers;
  report.all_synchronized = !emb.truncated;
  report.all_map_to_original_minimizers = !emb.truncated;
  for (const auto& spins : emb.minimizers) {
    const auto s = embedded.model.assignment(spins);
    if (!psi(embedded, s)) {
      report.all_synchronized = false;
      report.all_map_to_original_minimizers = false;
      continue;
    }
    const double value = evaluate(embedded.original, tau(embedded, s));
    if (std::abs(value - original.value) > tolerance) {
      report.all_map_to_original_minimizers = false;
    }
  }
  report.pass = std::abs(emb.value + embedded.offset - original.value) <=
                    tolerance &&
                report.all_synchronized && report.all_map_to_original_minimizers;
  return report;
}

double synchronized_identity_error(const EmbeddedIsingModel& embedded,
                                   std::size_t guard) {
  const auto& og = embedded.original.graph();
  const auto n = og.num_vertices();
  if (n > guard || n > 30) {
    throw SizeError("synchronized identity check limited to " +
                    std::to_string(guard) + " vertices");
  }
  const auto& h = embedded.model.graph();
  const auto owner = owners(embedded.embedding);
  std::vector<std::size_t> owner_index(h.num_vertices());
  for (std::size_t q = 0; q < h.num_vertices(); ++q) {
    owner_index[q] = og.index(owner.at(h.vertex(q)));
  }

  double worst = 0.0;
  Spins t(n), s(h.num_vertices());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t v = 0; v < n; ++v) t[v] = (bits >> v) & 1U ? -1 : 1;
    for (std::size_t q = 0; q < s.size(); ++q) s[q] = t[owner_index[q]];
    const double error = std::abs(embedded.model.energy(s) + embedded.offset -
                                  embedded.original.energy(t));
    worst = std::max(worst, error);
  }
  return worst;
}

}  // namespace embising
