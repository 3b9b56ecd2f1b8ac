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

#pragma once

#include <string>
#include <vector>

#include "embising/embedding.hpp"
#include "embising/ising.hpp"
#include "embising/parameter_setter.hpp"
#include "embising/preprocess.hpp"
#include "embising/subproblem.hpp"

// JSON text in, JSON text out. Malformed documents throw ParseError with a
// JSON path such as "$.edges[2].strength"; well-formed documents that break
// a model invariant throw the matching semantic error. Numeric vertex ids
// are accepted and turned into strings. Doubles are written in the shortest
// form that reads back to the same value.

namespace embising {

/// {"vertices": [...], "edges": [{"u", "v", "strength"}], "weights": {...}}.
/// Missing weights are 0. With `require_nonzero`, zero strengths are a
/// ValidationError.
IsingModel parse_problem(const std::string& text, bool require_nonzero = true);
std::string write_problem(const IsingModel& model);

struct EmbeddingFile {
  Graph hardware;
  Embedding embedding;
};

/// {"hardware": {"vertices": [...], "edges": [[a, b] or {"u", "v"}]},
///  "map": {original: [hardware...]}}.
EmbeddingFile parse_embedding(const std::string& text);
std::string write_embedding(const EmbeddingFile& file);

/// The embedded model's own vertices/edges/weights (so the file also reads
/// as a problem), plus offset_c, gamma, c_max, strategy, per_vertex, map and
/// the original problem.
EmbeddedIsingModel parse_result(const std::string& text);
std::string write_result(const EmbeddedIsingModel& embedded);

/// {"samples": [{id: +-1, ...}, ...]} or a bare array of such objects.
std::vector<SpinAssignment> parse_samples(const std::string& text);
std::string write_samples(const std::vector<SpinAssignment>& samples);

/// {"vertex", "graph": {"vertices", "edges"}, "sigma": {...}, "lambda",
///  "gamma"}.
SubproblemInstance parse_instance(const std::string& text);
std::string write_instance(const SubproblemInstance& inst);

/// {"reduced": problem, "fixed": [...], "weight_adjustments": {...},
///  "offset"}.
std::string write_preprocess(const PreprocessResult& result);

std::string write_graph(const Graph& g);

/// Whole file as text; throws ParseError if it cannot be read.
std::string read_file(const std::string& path);
/// Throws Error if it cannot be written.
void write_file(const std::string& path, const std::string& text);

}  // namespace embising
