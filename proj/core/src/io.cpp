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

#include "embising/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "embising/error.hpp"

namespace embising {

namespace {

using json = nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string key_path(const std::string& path, const std::string& key) {
  return path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
}

void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
}

const json& member(const json& obj, const std::string& key,
                   const std::string& path) {
  expect_object(obj, path);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing key '" + key + "'");
  return *it;
}

const json* optional_member(const json& obj, const std::string& key,
                            const std::string& path) {
  expect_object(obj, path);
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

VertexId read_id(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  throw ParseError(path + ": expected a vertex id (string or integer)");
}

double read_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path + ": expected a number");
  const double value = j.get<double>();
  if (!std::isfinite(value)) throw ParseError(path + ": expected a finite number");
  return value;
}

bool read_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path + ": expected a boolean");
  return j.get<bool>();
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string");
  return j.get<std::string>();
}

std::size_t read_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(path + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<VertexId> read_ids(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < j.size(); ++i) ids.push_back(read_id(j[i], index_path(path, i)));
  return ids;
}

Edge read_plain_edge(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(path + ": an edge pair needs two ids");
    return Edge(read_id(j[0], index_path(path, 0)), read_id(j[1], index_path(path, 1)));
  }
  if (j.is_object()) {
    return Edge(read_id(member(j, "u", path), key_path(path, "u")),
                read_id(member(j, "v", path), key_path(path, "v")));
  }
  throw ParseError(path + ": expected an edge pair or {\"u\", \"v\"} object");
}

Graph read_plain_graph(const json& j, const std::string& path) {
  auto vertices = read_ids(member(j, "vertices", path), key_path(path, "vertices"));
  const auto& edges_json = member(j, "edges", path);
  const auto edges_path = key_path(path, "edges");
  expect_array(edges_json, edges_path);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    edges.push_back(read_plain_edge(edges_json[i], index_path(edges_path, i)));
  }
  return Graph(std::move(vertices), std::move(edges));
}

json graph_json(const Graph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  return {{"vertices", vertices}, {"edges", edges}};
}

IsingModel read_model(const json& j, const std::string& path, bool require_nonzero) {
  auto vertices = read_ids(member(j, "vertices", path), key_path(path, "vertices"));
  const auto& edges_json = member(j, "edges", path);
  const auto edges_path = key_path(path, "edges");
  expect_array(edges_json, edges_path);
  std::vector<Edge> edges;
  std::map<Edge, double> strengths;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const auto p = index_path(edges_path, i);
    const auto& e = edges_json[i];
    Edge edge(read_id(member(e, "u", p), key_path(p, "u")),
              read_id(member(e, "v", p), key_path(p, "v")));
    const double s = read_number(member(e, "strength", p), key_path(p, "strength"));
    if (require_nonzero && s == 0.0) {
      throw ValidationError(p + ": strengths of an original problem must be nonzero");
    }
    edges.push_back(edge);
    strengths[edge] = s;
  }
  std::map<VertexId, double> weights;
  if (const auto* w = optional_member(j, "weights", path)) {
    const auto wpath = key_path(path, "weights");
    expect_object(*w, wpath);
    for (const auto& [id, value] : w->items()) {
      weights[id] = read_number(value, key_path(wpath, id));
    }
  }
  return IsingModel::from_maps(Graph(std::move(vertices), std::move(edges)),
                               weights, strengths);
}

json model_json(const IsingModel& model) {
  const auto& g = model.graph();
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v);
  json edges = json::array();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    edges.push_back({{"u", g.edge(e).u},
                     {"v", g.edge(e).v},
                     {"strength", model.strengths()[e]}});
  }
  json weights = json::object();
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    weights[g.vertex(i)] = model.weights()[i];
  }
  return {{"vertices", vertices}, {"edges", edges}, {"weights", weights}};
}

Embedding read_map(const json& j, const std::string& path) {
  expect_object(j, path);
  Embedding::ChainMap chains;
  for (const auto& [v, chain] : j.items()) {
    chains.emplace(v, read_ids(chain, key_path(path, v)));
  }
  return Embedding(std::move(chains));
}

json map_json(const Embedding& phi) {
  json map = json::object();
  for (const auto& [v, chain] : phi.chains()) map[v] = chain;
  return map;
}

std::map<VertexId, double> read_number_map(const json& j, const std::string& path) {
  expect_object(j, path);
  std::map<VertexId, double> out;
  for (const auto& [k, value] : j.items()) out[k] = read_number(value, key_path(path, k));
  return out;
}

}  // namespace

IsingModel parse_problem(const std::string& text, bool require_nonzero) {
  return read_model(parse_json(text), "$", require_nonzero);
}

std::string write_problem(const IsingModel& model) { return dump(model_json(model)); }

EmbeddingFile parse_embedding(const std::string& text) {
  const auto j = parse_json(text);
  EmbeddingFile file;
  file.hardware = read_plain_graph(member(j, "hardware", "$"), "$.hardware");
  file.embedding = read_map(member(j, "map", "$"), "$.map");
  return file;
}

std::string write_embedding(const EmbeddingFile& file) {
  return dump({{"hardware", graph_json(file.hardware)},
               {"map", map_json(file.embedding)}});
}

EmbeddedIsingModel parse_result(const std::string& text) {
  const auto j = parse_json(text);
  EmbeddedIsingModel out;
  out.model = read_model(j, "$", false);
  out.original = read_model(member(j, "original", "$"), "$.original", true);
  out.embedding = read_map(member(j, "map", "$"), "$.map");
  out.offset = read_number(member(j, "offset_c", "$"), "$.offset_c");
  out.gamma = read_number(member(j, "gamma", "$"), "$.gamma");

  const auto strategy = read_string(member(j, "strategy", "$"), "$.strategy");
  auto parsed = parse_outer_strategy(strategy);
  if (!parsed) throw ParseError("$.strategy: unknown strategy '" + strategy + "'");
  out.strategy = *parsed;
  if (const auto* k = optional_member(j, "kind", "$")) {
    const auto kind = read_string(*k, "$.kind");
    if (kind == "optimal") {
      out.kind = ParameterKind::kOptimal;
    } else if (kind == "baseline") {
      out.kind = ParameterKind::kBaseline;
    } else {
      throw ParseError("$.kind: unknown kind '" + kind + "'");
    }
  }
  if (const auto* f = optional_member(j, "factor", "$")) out.factor = read_number(*f, "$.factor");
  if (const auto* t = optional_member(j, "use_spanning_tree", "$")) {
    out.use_spanning_tree = read_bool(*t, "$.use_spanning_tree");
  }

  const auto& per_vertex = member(j, "per_vertex", "$");
  expect_object(per_vertex, "$.per_vertex");
  for (const auto& [v, entry] : per_vertex.items()) {
    const auto p = key_path("$.per_vertex", v);
    VertexRecord record;
    record.theta = read_number(member(entry, "theta", p), key_path(p, "theta"));
    record.lp_theta = record.theta;
    if (const auto* lt = optional_member(entry, "lp_theta", p)) {
      record.lp_theta = read_number(*lt, key_path(p, "lp_theta"));
    }
    record.omega = read_number_map(member(entry, "omega", p), key_path(p, "omega"));
    if (const auto* g = optional_member(entry, "gamma", p)) {
      record.gamma = read_number(*g, key_path(p, "gamma"));
    }
    if (const auto* c = optional_member(entry, "num_constraints", p)) {
      record.num_constraints = read_count(*c, key_path(p, "num_constraints"));
    }
    if (const auto* tc = optional_member(entry, "tight_cuts", p)) {
      const auto tpath = key_path(p, "tight_cuts");
      expect_array(*tc, tpath);
      for (std::size_t i = 0; i < tc->size(); ++i) {
        record.tight_cuts.push_back(read_ids((*tc)[i], index_path(tpath, i)));
      }
    }
    out.per_vertex.emplace(v, std::move(record));
  }
  return out;
}

std::string write_result(const EmbeddedIsingModel& embedded) {
  json j = model_json(embedded.model);
  j["offset_c"] = embedded.offset;
  j["gamma"] = embedded.gamma;
  j["c_max"] = c_max(embedded.model);
  j["strategy"] = to_string(embedded.strategy);
  j["kind"] = to_string(embedded.kind);
  if (embedded.kind == ParameterKind::kBaseline) j["factor"] = embedded.factor;
  j["use_spanning_tree"] = embedded.use_spanning_tree;
  j["map"] = map_json(embedded.embedding);
  j["original"] = model_json(embedded.original);
  json per_vertex = json::object();
  for (const auto& [v, record] : embedded.per_vertex) {
    json omega = json::object();
    for (const auto& [q, w] : record.omega) omega[q] = w;
    per_vertex[v] = {{"theta", record.theta},
                     {"lp_theta", record.lp_theta},
                     {"omega", omega},
                     {"tight_cuts", record.tight_cuts},
                     {"gamma", record.gamma},
                     {"num_constraints", record.num_constraints}};
  }
  j["per_vertex"] = per_vertex;
  return dump(j);
}

std::vector<SpinAssignment> parse_samples(const std::string& text) {
  const auto j = parse_json(text);
  const json* list = &j;
  std::string path = "$";
  if (j.is_object()) {
    list = &member(j, "samples", "$");
    path = "$.samples";
  }
  expect_array(*list, path);
  std::vector<SpinAssignment> samples;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto p = index_path(path, i);
    const auto& sample = (*list)[i];
    expect_object(sample, p);
    SpinAssignment s;
    for (const auto& [id, value] : sample.items()) {
      if (!value.is_number_integer() ||
          (value.get<long long>() != 1 && value.get<long long>() != -1)) {
        throw ParseError(key_path(p, id) + ": expected +1 or -1");
      }
      s[id] = value.get<int>();
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

std::string write_samples(const std::vector<SpinAssignment>& samples) {
  json list = json::array();
  for (const auto& s : samples) {
    json obj = json::object();
    for (const auto& [id, value] : s) obj[id] = value;
    list.push_back(obj);
  }
  return dump({{"samples", list}});
}

SubproblemInstance parse_instance(const std::string& text) {
  const auto j = parse_json(text);
  SubproblemInstance inst;
  if (const auto* v = optional_member(j, "vertex", "$")) inst.vertex = read_id(*v, "$.vertex");
  inst.graph = read_plain_graph(member(j, "graph", "$"), "$.graph");
  const auto sigma = read_number_map(member(j, "sigma", "$"), "$.sigma");
  inst.sigma.assign(inst.graph.num_vertices(), 0.0);
  for (const auto& [q, value] : sigma) {
    auto idx = inst.graph.find_vertex(q);
    if (!idx) throw ValidationError("$.sigma." + q + ": not a vertex of the graph");
    inst.sigma[*idx] = value;
  }
  inst.lambda = read_number(member(j, "lambda", "$"), "$.lambda");
  inst.gamma = read_number(member(j, "gamma", "$"), "$.gamma");
  return inst;
}

std::string write_instance(const SubproblemInstance& inst) {
  json sigma = json::object();
  for (std::size_t i = 0; i < inst.graph.num_vertices(); ++i) {
    sigma[inst.graph.vertex(i)] = inst.sigma.at(i);
  }
  return dump({{"vertex", inst.vertex},
               {"graph", graph_json(inst.graph)},
               {"sigma", sigma},
               {"lambda", inst.lambda},
               {"gamma", inst.gamma}});
}

std::string write_preprocess(const PreprocessResult& result) {
  json fixed = json::array();
  for (const auto& f : result.fixed) {
    fixed.push_back({{"vertex", f.vertex},
                     {"value", f.value},
                     {"weight_at_fixing", f.weight_at_fixing}});
  }
  json adjustments = json::object();
  for (const auto& [v, delta] : result.weight_adjustments) adjustments[v] = delta;
  return dump({{"reduced", model_json(result.reduced)},
               {"fixed", fixed},
               {"weight_adjustments", adjustments},
               {"offset", result.offset}});
}

std::string write_graph(const Graph& g) { return dump(graph_json(g)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open file for writing");
  out << text;
  if (!out) throw Error(path + ": write failed");
}

}  // namespace embising
