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

// embising: parameter setting for embedded Ising problems.
//
// Exit codes: 0 success, 1 validation or verification failure, 2 usage or
// parse error.

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "embising/comparison.hpp"
#include "embising/cuts.hpp"
#include "embising/embedding.hpp"
#include "embising/error.hpp"
#include "embising/io.hpp"
#include "embising/lp.hpp"
#include "embising/oracle.hpp"
#include "embising/parameter_setter.hpp"
#include "embising/preprocess.hpp"
#include "embising/random.hpp"

namespace {

using json = nlohmann::json;
using namespace embising;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Common {
  bool json_output = false;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Infinite margins (singleton chains) are written as null.
json number_or_null(double x) {
  return std::isfinite(x) ? json(x) : json(nullptr);
}

std::string spins_text(const Spins& spins) {
  std::string out;
  for (int s : spins) out += s > 0 ? '+' : '-';
  return out;
}

json spins_json(const Graph& g, const Spins& spins) {
  json obj = json::object();
  for (std::size_t i = 0; i < spins.size(); ++i) obj[g.vertex(i)] = spins[i];
  return obj;
}

json assignment_json(const SpinAssignment& s) {
  json obj = json::object();
  for (const auto& [v, value] : s) obj[v] = value;
  return obj;
}

std::map<VertexId, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<VertexId, double> out;
  for (const auto& item : items) {
    const auto eq = item.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw CLI::ValidationError("--gamma-override", "expected vertex=value, got '" + item + "'");
    }
    try {
      std::size_t used = 0;
      const double value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[item.substr(0, eq)] = value;
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--gamma-override", "bad value in '" + item + "'");
    }
  }
  return out;
}

std::string lp_file_name(const VertexId& v) {
  std::string name = "lp_";
  for (char c : v) {
    name += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  }
  return name + ".lp";
}

// ---------------------------------------------------------------- validate

int run_validate(const Common& common, const std::string& problem_path,
                 const std::string& embedding_path) {
  const auto model = parse_problem(read_file(problem_path));
  const auto file = parse_embedding(read_file(embedding_path));
  const auto report = validate_embedding(model.graph(), file.hardware, file.embedding);
  if (common.json_output) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"condition", to_string(v.condition)}, {"message", v.message}});
    }
    print_json({{"valid", report.valid()}, {"violations", violations}});
  } else if (report.valid()) {
    std::cout << "embedding valid: " << file.embedding.chains().size() << " chains, "
              << file.embedding.total_size() << " hardware vertices\n";
  } else {
    std::cout << "embedding invalid:\n";
    for (const auto& v : report.violations) {
      std::cout << "  [" << to_string(v.condition) << "] " << v.message << '\n';
    }
  }
  return report.valid() ? kOk : kFailure;
}

// -------------------------------------------------------------- preprocess

int run_preprocess(const Common& common, const std::string& problem_path, bool strict,
                   const std::string& out_path) {
  const auto model = parse_problem(read_file(problem_path));
  const auto result = preprocess(model, strict);
  if (!out_path.empty()) write_file(out_path, write_problem(result.reduced));
  if (common.json_output) {
    std::cout << write_preprocess(result);
    return kOk;
  }
  std::cout << "fixed " << result.fixed.size() << " of " << model.graph().num_vertices()
            << " vertices, offset " << result.offset << '\n';
  for (const auto& f : result.fixed) {
    std::cout << "  " << f.vertex << " = " << std::showpos << f.value << std::noshowpos
              << "  (weight " << f.weight_at_fixing << ")\n";
  }
  std::cout << "reduced model: " << result.reduced.graph().num_vertices() << " vertices, "
            << result.reduced.graph().num_edges() << " edges\n";
  if (out_path.empty() && result.reduced.graph().num_vertices() > 0) {
    std::cout << write_problem(result.reduced);
  }
  return kOk;
}

// -------------------------------------------------------------- set-params

struct SetParamsArgs {
  std::string problem, embedding, out, dump_lp;
  double gamma = 0.5;
  std::string strategy = "uniform-split";
  bool no_tree = false;
  std::vector<std::string> overrides;
};

ParameterOptions parameter_options(double gamma, const std::string& strategy, bool no_tree,
                                   const std::vector<std::string>& overrides) {
  ParameterOptions options;
  options.gamma = gamma;
  options.strategy = *parse_outer_strategy(strategy);
  options.use_spanning_tree = !no_tree;
  options.gamma_overrides = parse_overrides(overrides);
  return options;
}

void print_summary(const EmbeddedIsingModel& embedded) {
  const auto s = summarize(embedded);
  std::cout << to_string(s.kind) << " parameters (" << to_string(s.strategy) << ")\n"
            << "  gamma      " << s.gamma << '\n'
            << "  offset c   " << s.offset << '\n'
            << "  C_max      " << s.c_max << '\n'
            << "  max theta  " << s.max_theta << '\n'
            << "  LP rows    " << s.total_constraints << '\n';
  for (const auto& [v, record] : embedded.per_vertex) {
    std::cout << "  " << v << ": chain " << record.omega.size() << ", theta "
              << record.theta << ", tight cuts " << record.tight_cuts.size() << '\n';
  }
}

void dump_lps(const std::string& dir, const IsingModel& model, const EmbeddingFile& file,
              const ParameterOptions& options) {
  std::filesystem::create_directories(dir);
  const auto structure = build_embedded_structure(model.graph(), file.hardware, file.embedding);
  const auto outer = assign_outer_strengths(structure, model, options.strategy);
  for (const auto& v : model.graph().vertices()) {
    auto it = options.gamma_overrides.find(v);
    const double gamma = it == options.gamma_overrides.end() ? options.gamma : it->second;
    const auto inst = extract_instance(v, structure, outer, model, gamma, options.use_spanning_tree);
    const auto family = inst.graph.num_vertices() == 1
                            ? CutFamily{CutFamilyKind::kTreeEdges, {}}
                        : options.use_spanning_tree ? tree_edge_cuts(inst.graph)
                                                    : connected_cuts(inst.graph);
    std::ostringstream text;
    write_lp_format(text, build_lp(inst, family));
    write_file((std::filesystem::path(dir) / lp_file_name(v)).string(), text.str());
  }
}

int run_set_params(const Common& common, const SetParamsArgs& args) {
  const auto model = parse_problem(read_file(args.problem));
  const auto file = parse_embedding(read_file(args.embedding));
  const auto options = parameter_options(args.gamma, args.strategy, args.no_tree, args.overrides);
  if (!args.dump_lp.empty()) dump_lps(args.dump_lp, model, file, options);
  const auto embedded = set_parameters(model, file.hardware, file.embedding, options);
  const auto text = write_result(embedded);
  if (!args.out.empty()) write_file(args.out, text);
  if (common.json_output) {
    std::cout << text;
  } else {
    print_summary(embedded);
    if (!args.out.empty()) std::cout << "result written to " << args.out << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------------ verify

json gap_json(const GapReport& gap) {
  json vertices = json::array();
  for (const auto& entry : gap.vertices) {
    json item = {{"vertex", entry.vertex},
                 {"pass", entry.report.pass},
                 {"worst_margin", number_or_null(entry.report.worst_margin)},
                 {"required_gap", entry.report.required_gap},
                 {"pairs_checked", entry.report.pairs_checked}};
    if (!entry.report.vacuous()) {
      item["witness"] = {{"r", spins_json(entry.graph, entry.report.witness_r)},
                         {"s", spins_json(entry.graph, entry.report.witness_s)}};
    }
    vertices.push_back(item);
  }
  return {{"pass", gap.pass}, {"worst_margin", number_or_null(gap.worst_margin)},
          {"vertices", vertices}};
}

void print_gap(const GapReport& gap) {
  std::cout << "sufficiency: " << (gap.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& entry : gap.vertices) {
    std::cout << "  " << entry.vertex << ": " << (entry.report.pass ? "pass" : "FAIL");
    if (entry.report.vacuous()) {
      std::cout << " (single vertex)\n";
      continue;
    }
    std::cout << ", worst margin " << entry.report.worst_margin << " (need "
              << entry.report.required_gap << "), witness r=" << spins_text(entry.report.witness_r)
              << " s=" << spins_text(entry.report.witness_s) << '\n';
  }
}

int run_verify(const Common& common, const std::string& result_path, bool end_to_end,
               std::optional<double> raw_gap) {
  const auto embedded = parse_result(read_file(result_path));
  const auto gap = verify_solution_gap(embedded, raw_gap);
  bool ok = gap.pass;
  json out = {{"sufficiency", gap_json(gap)}};
  std::optional<EquivalenceReport> eq;
  if (end_to_end) {
    eq = verify_equivalence(embedded);
    ok = ok && eq->pass;
    out["equivalence"] = {{"pass", eq->pass},
                          {"original_minimum", eq->original_minimum},
                          {"embedded_minimum", eq->embedded_minimum},
                          {"offset_c", eq->offset},
                          {"embedded_minimizers", eq->embedded_minimizers},
                          {"all_synchronized", eq->all_synchronized},
                          {"all_map_to_original_minimizers", eq->all_map_to_original_minimizers}};
  }
  out["pass"] = ok;
  if (common.json_output) {
    print_json(out);
  } else {
    print_gap(gap);
    if (eq) {
      std::cout << "equivalence: " << (eq->pass ? "PASS" : "FAIL") << '\n'
                << "  original minimum  " << eq->original_minimum << '\n'
                << "  embedded minimum  " << eq->embedded_minimum << " + c " << eq->offset
                << " = " << eq->embedded_minimum + eq->offset << '\n'
                << "  minimizers        " << eq->embedded_minimizers
                << (eq->all_synchronized ? ", all synchronized" : ", NOT all synchronized")
                << '\n';
    }
  }
  return ok ? kOk : kFailure;
}

// ------------------------------------------------------------------- solve

int run_solve(const Common& common, const std::string& model_path, std::size_t limit) {
  const auto model = parse_problem(read_file(model_path), false);
  const auto result = brute_force_minimum(model);
  const auto& g = model.graph();
  if (common.json_output) {
    json minimizers = json::array();
    for (std::size_t i = 0; i < result.minimizers.size() && i < limit; ++i) {
      minimizers.push_back(spins_json(g, result.minimizers[i]));
    }
    print_json({{"value", result.value},
                {"num_minimizers", result.num_minimizers},
                {"minimizers", minimizers}});
    return kOk;
  }
  std::cout << "minimum " << result.value << ", " << result.num_minimizers << " minimizer"
            << (result.num_minimizers == 1 ? "" : "s") << '\n';
  for (std::size_t i = 0; i < result.minimizers.size() && i < limit; ++i) {
    std::cout << "  ";
    for (std::size_t q = 0; q < g.num_vertices(); ++q) {
      std::cout << (q ? " " : "") << g.vertex(q) << '=' << std::showpos
                << result.minimizers[i][q] << std::noshowpos;
    }
    std::cout << '\n';
  }
  if (result.num_minimizers > limit) std::cout << "  ...\n";
  return kOk;
}

// ----------------------------------------------------------------- deembed

int run_deembed(const Common& common, const std::string& result_path,
                const std::string& samples_path, bool majority) {
  const auto embedded = parse_result(read_file(result_path));
  const auto samples = parse_samples(read_file(samples_path));
  bool ok = true;
  json rows = json::array();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const double energy = evaluate(embedded.model, s);
    json row = {{"index", i}, {"energy", energy}, {"psi", psi(embedded, s)}};
    if (row["psi"].get<bool>()) {
      const auto t = tau(embedded, s);
      const double original = evaluate(embedded.original, t);
      const double error = std::abs(energy + embedded.offset - original);
      const bool holds = error <= 1e-9 * std::max(1.0, std::abs(original));
      ok = ok && holds;
      row["tau"] = assignment_json(t);
      row["original_energy"] = original;
      row["offset_identity"] = holds;
    }
    if (majority) {
      const auto t = majority_vote(embedded, s);
      row["majority"] = assignment_json(t);
      row["majority_energy"] = evaluate(embedded.original, t);
    }
    rows.push_back(row);
  }
  if (common.json_output) {
    print_json({{"pass", ok}, {"offset_c", embedded.offset}, {"samples", rows}});
  } else {
    std::cout << "offset c " << embedded.offset << '\n';
    for (const auto& row : rows) {
      std::cout << "  sample " << row["index"].get<std::size_t>() << ": energy "
                << row["energy"].get<double>();
      if (row["psi"].get<bool>()) {
        std::cout << ", synchronized, original energy " << row["original_energy"].get<double>()
                  << (row["offset_identity"].get<bool>() ? "" : " (OFFSET IDENTITY FAILS)");
      } else {
        std::cout << ", not synchronized";
      }
      if (majority) std::cout << ", majority energy " << row["majority_energy"].get<double>();
      std::cout << '\n';
    }
  }
  return ok ? kOk : kFailure;
}

// ----------------------------------------------------------------- compare

int run_compare(const Common& common, const SetParamsArgs& args, double factor) {
  const auto model = parse_problem(read_file(args.problem));
  const auto file = parse_embedding(read_file(args.embedding));
  const auto options = parameter_options(args.gamma, args.strategy, args.no_tree, args.overrides);
  const auto report = compare(model, file.hardware, file.embedding, options, factor);
  if (common.json_output) {
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"vertex", r.vertex},
                      {"chain_size", r.chain_size},
                      {"theta_optimal", r.theta_optimal},
                      {"baseline_strength", r.baseline_strength},
                      {"optimal_pass", r.optimal_pass},
                      {"baseline_pass", r.baseline_pass},
                      {"optimal_margin", number_or_null(r.optimal_margin)},
                      {"baseline_margin", number_or_null(r.baseline_margin)}});
    }
    print_json({{"gamma", report.gamma},
                {"factor", report.factor},
                {"c_max_original", report.c_max_original},
                {"c_max_optimal", report.c_max_optimal},
                {"c_max_baseline", report.c_max_baseline},
                {"optimal_passes", report.optimal_passes},
                {"baseline_passes", report.baseline_passes},
                {"theta_within_baseline_bound", report.theta_within_baseline_bound()},
                {"vertices", rows}});
    return kOk;
  }
  std::cout << "C_max original " << report.c_max_original << ", optimal " << report.c_max_optimal
            << ", baseline x" << factor << ' ' << report.c_max_baseline << '\n'
            << "sufficiency at raw gap " << 2.0 * report.gamma << ": optimal "
            << (report.optimal_passes ? "PASS" : "FAIL") << ", baseline "
            << (report.baseline_passes ? "PASS" : "FAIL") << '\n';
  std::cout << std::left << std::setw(12) << "vertex" << std::setw(7) << "chain"
            << std::setw(14) << "theta" << std::setw(14) << "baseline" << std::setw(10)
            << "optimal" << "baseline\n";
  for (const auto& r : report.rows) {
    std::cout << std::setw(12) << r.vertex << std::setw(7) << r.chain_size << std::setw(14)
              << r.theta_optimal << std::setw(14) << r.baseline_strength << std::setw(10)
              << (r.optimal_pass ? "pass" : "FAIL") << (r.baseline_pass ? "pass" : "FAIL")
              << '\n';
  }
  return kOk;
}

// --------------------------------------------------------------- generators

int run_gen_tree(std::size_t n, std::uint64_t seed, const std::string& prefix) {
  Rng rng(seed);
  std::cout << write_graph(random_tree(n, rng, prefix));
  return kOk;
}

int run_gen_instance(std::size_t n, std::uint64_t seed, double gamma, double extra,
                     double sigma_max, double lambda_fraction) {
  Rng rng(seed);
  Graph g = extra > 0.0 ? random_connected_graph(n, extra, rng) : random_tree(n, rng);
  std::cout << write_instance(random_instance(std::move(g), rng, gamma, sigma_max, lambda_fraction));
  return kOk;
}

// ---------------------------------------------------------------- solve-lp

int run_solve_lp(const Common& common, const std::string& instance_path,
                 const std::string& family_name, const std::string& dump_path) {
  const auto inst = parse_instance(read_file(instance_path));
  check_instance(inst);
  CutFamily family;
  if (family_name == "tree") {
    family = tree_edge_cuts(inst.graph);
  } else if (family_name == "connected") {
    family = connected_cuts(inst.graph);
  } else if (family_name == "all") {
    family = all_subsets(inst.graph);
  } else {
    family = default_cut_family(inst.graph);
  }
  if (!dump_path.empty()) {
    std::ostringstream text;
    write_lp_format(text, build_lp(inst, family));
    write_file(dump_path, text.str());
  }
  const auto w = solve_weight_distribution(inst, family);
  if (common.json_output) {
    json omega = json::object();
    for (std::size_t i = 0; i < w.omega.size(); ++i) omega[inst.graph.vertex(i)] = w.omega[i];
    json tight = json::array();
    for (auto k : w.tight_cuts) {
      json ids = json::array();
      for (auto i : family.cuts[k].members) ids.push_back(inst.graph.vertex(i));
      tight.push_back(ids);
    }
    print_json({{"theta", w.theta},
                {"theta_half", theta_half(inst)},
                {"omega", omega},
                {"family", to_string(family.kind)},
                {"family_size", family.size()},
                {"num_constraints", w.num_constraints},
                {"tight_cuts", tight},
                {"iterations", w.iterations}});
    return kOk;
  }
  std::cout << "family " << to_string(family.kind) << " (" << family.size() << " cuts), "
            << w.num_constraints << " rows\n"
            << "theta* " << w.theta << " (theta_half " << theta_half(inst) << ")\n"
            << "tight cuts " << w.tight_cuts.size() << ", simplex iterations " << w.iterations
            << '\n';
  return kOk;
}

struct Args {
  std::string problem, embedding, result, samples, instance, out, dump;
  bool strict = false, end_to_end = false, majority = false;
  double raw_gap = 0.0, factor = 2.0, extra = 0.0, sigma_max = 5.0, lambda_fraction = 0.9;
  double gamma = 0.5;
  std::size_t n = 8, limit = 16;
  std::uint64_t seed = 1;
  std::string prefix = "q", family = "auto";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter setting for embedded Ising problems"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  Args a;
  SetParamsArgs sp;
  app.add_flag("--json", common.json_output, "Machine-readable JSON output");
  std::cout << std::setprecision(12);

  auto* validate = app.add_subcommand("validate", "Check an embedding against a problem");
  validate->add_option("-p,--problem", a.problem, "Problem file")->required()->check(CLI::ExistingFile);
  validate->add_option("-e,--embedding", a.embedding, "Embedding file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* pre = app.add_subcommand("preprocess", "Fix dominated spins");
  pre->add_option("-p,--problem", a.problem, "Problem file")->required()->check(CLI::ExistingFile);
  pre->add_flag("--strict", a.strict, "Fix only when |W| > sum |S|");
  pre->add_option("-o,--output", a.out, "Write the reduced problem here");

  auto add_param_options = [&sp](CLI::App* cmd) {
    cmd->add_option("-p,--problem", sp.problem, "Problem file")->required()->check(CLI::ExistingFile);
    cmd->add_option("-e,--embedding", sp.embedding, "Embedding file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--gamma", sp.gamma, "Gap gamma > 0")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--strategy", sp.strategy, "Outer strength split")
        ->check(CLI::IsMember({"uniform-split", "single-edge"}));
    cmd->add_flag("--no-tree", sp.no_tree, "Couple every intra edge (exponential cut family)");
    cmd->add_option("--gamma-override", sp.overrides, "Per-vertex gap, vertex=value");
  };

  auto* set_params = app.add_subcommand("set-params", "Compute optimal embedded parameters");
  add_param_options(set_params);
  set_params->add_option("-o,--output", sp.out, "Write the result file here");
  set_params->add_option("--dump-lp", sp.dump_lp,
                         "Write each vertex LP (CPLEX LP format) to this directory");

  auto* verify = app.add_subcommand("verify", "Check a result file with the brute-force oracles");
  verify->add_option("-r,--result", a.result, "Result file")->required()->check(CLI::ExistingFile);
  verify->add_flag("--end-to-end", a.end_to_end, "Also compare brute-force minima");
  auto* raw_gap = verify->add_option("--raw-gap", a.raw_gap, "Required gap (default 2 gamma)");

  auto* solve = app.add_subcommand("solve", "Brute-force minimum of any model file");
  solve->add_option("-p,--problem", a.problem, "Model file")->required()->check(CLI::ExistingFile);
  solve->add_option("--limit", a.limit, "Minimizers to print");

  auto* deembed = app.add_subcommand("deembed", "Map embedded samples back to the original problem");
  deembed->add_option("-r,--result", a.result, "Result file")->required()->check(CLI::ExistingFile);
  deembed->add_option("-s,--samples", a.samples, "Samples file")->required()->check(CLI::ExistingFile);
  deembed->add_flag("--majority", a.majority, "Also report majority vote per chain");

  auto* cmp = app.add_subcommand("compare", "Optimal parameters against the uniform baseline");
  add_param_options(cmp);
  cmp->add_option("--factor", a.factor, "Baseline multiple of C_max")->check(CLI::PositiveNumber);

  auto* gen_tree = app.add_subcommand("gen-tree", "Random labelled tree");
  gen_tree->add_option("-n", a.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen_tree->add_option("--seed", a.seed, "Random seed");
  gen_tree->add_option("--prefix", a.prefix, "Vertex id prefix");

  auto* gen_instance = app.add_subcommand("gen-instance", "Random weight-distribution instance");
  gen_instance->add_option("-n", a.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen_instance->add_option("--seed", a.seed, "Random seed");
  gen_instance->add_option("--gamma", a.gamma, "Gap")->check(CLI::PositiveNumber);
  gen_instance->add_option("--extra", a.extra, "Extra edge probability (0 gives a tree)")
      ->check(CLI::Range(0.0, 1.0));
  gen_instance->add_option("--sigma-max", a.sigma_max, "Upper bound of sigma")
      ->check(CLI::PositiveNumber);
  gen_instance->add_option("--lambda-fraction", a.lambda_fraction, "lambda < fraction * sigma(V)")
      ->check(CLI::Range(0.0, 1.0));

  auto* solve_lp = app.add_subcommand("solve-lp", "Solve the weight LP of one instance file");
  solve_lp->add_option("-i,--instance", a.instance, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  solve_lp->add_option("--family", a.family, "Cut family")
      ->check(CLI::IsMember({"auto", "tree", "connected", "all"}));
  solve_lp->add_option("--dump-lp", a.dump, "Write the LP (CPLEX LP format) here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return run_validate(common, a.problem, a.embedding);
    if (pre->parsed()) return run_preprocess(common, a.problem, a.strict, a.out);
    if (set_params->parsed()) return run_set_params(common, sp);
    if (verify->parsed()) {
      return run_verify(common, a.result, a.end_to_end,
                        raw_gap->count() ? std::optional<double>(a.raw_gap) : std::nullopt);
    }
    if (solve->parsed()) return run_solve(common, a.problem, a.limit);
    if (deembed->parsed()) return run_deembed(common, a.result, a.samples, a.majority);
    if (cmp->parsed()) return run_compare(common, sp, a.factor);
    if (gen_tree->parsed()) return run_gen_tree(a.n, a.seed, a.prefix);
    if (gen_instance->parsed()) {
      return run_gen_instance(a.n, a.seed, a.gamma, a.extra, a.sigma_max, a.lambda_fraction);
    }
    if (solve_lp->parsed()) return run_solve_lp(common, a.instance, a.family, a.dump);
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreprocessableVertexError& e) {
    std::cerr << "error: " << e.what() << "\n(hint: embising preprocess -p <problem>)\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
