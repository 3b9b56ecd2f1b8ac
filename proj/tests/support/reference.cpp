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


#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace embising::testing {

double naive_energy(const IsingModel& model, const SpinAssignment& s) {
  const auto& g = model.graph();
  double total = 0.0;
  for (const auto& v : g.vertices()) total += model.weight(v) * s.at(v);
  for (const auto& e : g.edges()) {
    total += model.strength(e.u, e.v) * s.at(e.u) * s.at(e.v);
  }
  return total;
}

NaiveMinimum naive_minimum(const IsingModel& model) {
  const auto& g = model.graph();
  const auto n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("naive_minimum: too many vertices");
  std::vector<std::pair<double, std::vector<int>>> all;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    SpinAssignment s;
    std::vector<int> dense(n);
    for (std::size_t i = 0; i < n; ++i) {
      dense[i] = spin_of(bits, i);
      s[g.vertex(i)] = dense[i];
    }
    all.emplace_back(naive_energy(model, s), dense);
  }
  NaiveMinimum out;
  out.value = std::numeric_limits<double>::infinity();
  for (const auto& [value, spins] : all) out.value = std::min(out.value, value);
  for (const auto& [value, spins] : all) {
    if (value <= out.value + 1e-9) out.minimizers.insert(spins);
  }
  return out;
}

IdFamily as_family(const CutFamily& family, const Graph& g) {
  IdFamily out;
  for (const auto& ids : family.as_ids(g)) out.insert(IdSet(ids.begin(), ids.end()));
  return out;
}

namespace {

bool connected_mask(const Graph& g, std::uint64_t mask) {
  const auto n = g.num_vertices();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) {
      start = i;
      break;
    }
  }
  if (start == n) return false;
  std::uint64_t seen = std::uint64_t{1} << start;
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges()) {
      const auto a = g.index(e.u), b = g.index(e.v);
      std::size_t w = n;
      if (a == v) w = b;
      if (b == v) w = a;
      if (w == n || !((mask >> w) & 1U) || ((seen >> w) & 1U)) continue;
      seen |= std::uint64_t{1} << w;
      stack.push_back(w);
    }
  }
  return seen == mask;
}

}  // namespace

IdFamily filtered_connected_cuts(const Graph& g) {
  const auto n = g.num_vertices();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  IdFamily out;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (!connected_mask(g, mask) || !connected_mask(g, full ^ mask)) continue;
    IdSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.insert(g.vertex(i));
    }
    out.insert(s);
  }
  return out;
}

std::size_t boundary_size(const Graph& g, std::uint64_t mask) {
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    const bool a = (mask >> g.index(e.u)) & 1U;
    const bool b = (mask >> g.index(e.v)) & 1U;
    if (a != b) ++count;
  }
  return count;
}

double tree_theta_reference(const SubproblemInstance& inst) {
  const auto& g = inst.graph;
  const auto n = g.num_vertices();
  if (n == 1) return std::abs(inst.lambda);

  std::vector<std::size_t> order{0}, parent(n, n);
  parent[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto v = order[k];
    for (const auto& e : g.edges()) {
      const auto a = g.index(e.u), b = g.index(e.v);
      const auto w = a == v ? b : b == v ? a : n;
      if (w == n || parent[w] != n) continue;
      parent[w] = v;
      order.push_back(w);
    }
  }
  double sigma_total = 0.0;
  for (double s : inst.sigma) sigma_total += s;
  std::vector<double> subtree_sigma(inst.sigma);
  for (std::size_t k = n; k-- > 1;) subtree_sigma[parent[order[k]]] += subtree_sigma[order[k]];

  const double lambda = inst.lambda, gamma = inst.gamma;
  auto feasible = [&](double theta) {
    std::vector<double> lo(n, -theta), hi(n, theta);
    for (std::size_t k = n; k-- > 0;) {
      const auto u = order[k];
      if (k > 0) {
        const double inside = subtree_sigma[u], outside = sigma_total - inside;
        const double upper = theta - gamma - std::min(inside, outside - lambda);
        const double lower = lambda - (theta - gamma - std::min(outside, inside - lambda));
        lo[u] = std::max(lo[u], lower);
        hi[u] = std::min(hi[u], upper);
        if (lo[u] > hi[u] + 1e-12) return false;
        lo[parent[u]] += lo[u];
        hi[parent[u]] += hi[u];
      }
    }
    return lo[0] <= lambda + 1e-12 && lambda <= hi[0] + 1e-12;
  };

  double low = 0.0, high = sigma_total + lambda + gamma + 1.0;
  while (!feasible(high)) high *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (low + high);
    (feasible(mid) ? high : low) = mid;
  }
  return high;
}

std::optional<double> dense_minimize(const std::vector<double>& c,
                                     std::vector<DenseRow> rows) {
  constexpr double eps = 1e-10;
  const std::size_t n = c.size(), m = rows.size();
  for (auto& row : rows) {
    if (row.b < 0.0) {
      for (double& a : row.a) a = -a;
      row.b = -row.b;
      if (row.sense == '<') {
        row.sense = '>';
      } else if (row.sense == '>') {
        row.sense = '<';
      }
    }
  }
  std::size_t slacks = 0, artificials = 0;
  for (const auto& row : rows) {
    if (row.sense != '=') ++slacks;
    if (row.sense != '<') ++artificials;
  }
  const std::size_t cols = n + slacks + artificials;
  const std::size_t first_artificial = n + slacks;
  std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n, next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(rows[i].a.begin(), rows[i].a.end(), t[i].begin());
    t[i][cols] = rows[i].b;
    if (rows[i].sense == '<') {
      t[i][next_slack] = 1.0;
      basis[i] = next_slack++;
    } else {
      if (rows[i].sense == '>') t[i][next_slack++] = -1.0;
      t[i][next_artificial] = 1.0;
      basis[i] = next_artificial++;
    }
  }

  auto pivot = [&](std::size_t r, std::size_t j) {
    const double p = t[r][j];
    for (double& x : t[r]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][j] == 0.0) continue;
      const double f = t[i][j];
      for (std::size_t k = 0; k <= cols; ++k) t[i][k] -= f * t[r][k];
    }
    basis[r] = j;
  };

  // Returns false when unbounded.
  auto run = [&](const std::vector<double>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < allowed && enter == cols; ++j) {
        double reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= cost[basis[i]] * t[i][j];
        if (reduced < -eps) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = m;
      double best = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= eps) continue;
        const double ratio = t[i][cols] / t[i][enter];
        if (leave == m || ratio < best - eps ||
            (ratio <= best + eps && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  };

  std::vector<double> phase1(cols, 0.0);
  for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = 1.0;
  run(phase1, cols);
  double infeasibility = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= first_artificial) infeasibility += t[i][cols];
  }
  if (infeasibility > 1e-7) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < first_artificial) continue;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (std::abs(t[i][j]) > 1e-9) {
        pivot(i, j);
        break;
      }
    }
  }

  std::vector<double> phase2(cols, 0.0);
  std::copy(c.begin(), c.end(), phase2.begin());
  if (!run(phase2, first_artificial)) return std::nullopt;
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i) value += phase2[basis[i]] * t[i][cols];
  return value;
}

std::optional<double> dense_theta_reference(const SubproblemInstance& inst,
                                            bool connected_only) {
  const auto& g = inst.graph;
  const auto n = g.num_vertices();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  double sigma_total = 0.0;
  for (double s : inst.sigma) sigma_total += s;

  // x = (theta, y_0, ..., y_{n-1}) >= 0 with omega_v = y_v - theta.
  std::vector<DenseRow> rows;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (connected_only && (!connected_mask(g, mask) || !connected_mask(g, full ^ mask))) {
      continue;
    }
    DenseRow row;
    row.a.assign(n + 1, 0.0);
    double sigma_s = 0.0;
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        row.a[1 + i] = 1.0;
        sigma_s += inst.sigma[i];
        ++size;
      }
    }
    row.a[0] = -static_cast<double>(size + boundary_size(g, mask));
    row.sense = '<';
    row.b = -inst.gamma - std::min(sigma_s, sigma_total - sigma_s - inst.lambda);
    rows.push_back(std::move(row));
  }
  DenseRow balance;
  balance.a.assign(n + 1, 1.0);
  balance.a[0] = -static_cast<double>(n);
  balance.sense = '=';
  balance.b = inst.lambda;
  rows.push_back(balance);
  for (std::size_t i = 0; i < n; ++i) {
    DenseRow box;
    box.a.assign(n + 1, 0.0);
    box.a[0] = -2.0;
    box.a[1 + i] = 1.0;
    box.sense = '<';
    box.b = 0.0;
    rows.push_back(std::move(box));
  }
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  return dense_minimize(c, std::move(rows));
}

double naive_worst_margin(const SubproblemInstance& inst, double theta,
                          const std::vector<double>& omega) {
  const auto& g = inst.graph;
  const auto n = g.num_vertices();
  const std::uint64_t count = std::uint64_t{1} << n;
  auto energy = [&](std::uint64_t r, std::uint64_t s) {
    double total = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
      total += (omega[q] + inst.sigma[q] * spin_of(s, q)) * spin_of(r, q);
    }
    for (const auto& e : g.edges()) {
      total -= theta * spin_of(r, g.index(e.u)) * spin_of(r, g.index(e.v));
    }
    return total;
  };
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < count; ++s) {
    const double sync = std::min(energy(0, s), energy(count - 1, s));
    for (std::uint64_t r = 1; r + 1 < count; ++r) {
      worst = std::min(worst, energy(r, s) - sync);
    }
  }
  return worst;
}

IsingModel with_safe_weights(const IsingModel& model, Rng& rng) {
  const auto& g = model.graph();
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  std::vector<double> w(g.num_vertices());
  for (std::size_t v = 0; v < w.size(); ++v) {
    double influence = 0.0;
    for (auto e : g.incident_edges(v)) influence += std::abs(model.strengths()[e]);
    w[v] = u(rng) * influence;
  }
  return IsingModel(g, w, model.strengths());
}

EmbeddedCase random_embedded_case(Rng& rng, std::size_t max_original,
                                  std::size_t max_chain, std::size_t max_hardware) {
  std::uniform_int_distribution<std::size_t> size(2, max_original);
  for (;;) {
    const auto g = random_connected_graph(size(rng), 0.4, rng, "v");
    auto emb = random_embedding(g, rng, max_chain);
    if (emb.hardware.num_vertices() > max_hardware) continue;
    return {with_safe_weights(random_model(g, rng), rng), std::move(emb.hardware),
            std::move(emb.embedding)};
  }
}

}  // namespace embising::testing
