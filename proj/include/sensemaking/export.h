// Copyright 2026 The Sensemaking Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The merged knowledge graph and its JSON / Graphviz renderings.
//
// JSON layout (schema_version 1; keys are emitted in sorted order):
//   {
//     "schema_version": 1,
//     "nodes": [{"id", "kind": "existent"|"event"|"concept", "label",
//                "image"?, "origin": "observed"|"concept"}],
//     "edges": [{"source", "target", "label",
//                "origin": "observed"|"concept"|"hypothesis",
//                "hypothesis"?: {"id", "kind", "relation"?, "score",
//                                "evidence": [...]}}],
//     "solution": {"accepted": [...], "objectives": {...}, "scalar_score"}
//   }
// A hypothesis edge's score is its own evidence plus the scores of those
// premises listed in solution.accepted.

#ifndef SENSEMAKING_EXPORT_H_
#define SENSEMAKING_EXPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sensemaking/core_model.h"
#include "sensemaking/hypeval.h"

namespace sensemaking {

inline constexpr int kGraphSchemaVersion = 1;

enum class Origin { kObserved, kConcept, kHypothesis };

absl::string_view OriginName(Origin origin);

struct GraphNode {
  std::string id;
  std::string kind;
  std::string label;
  std::optional<int> image_index;
  Origin origin = Origin::kObserved;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct HypothesisAnnotation {
  std::string id;
  HypothesisKind kind = HypothesisKind::kReferentialIs;
  std::string relation;
  double score = 0.0;
  std::vector<Evidence> evidence;

  friend bool operator==(const HypothesisAnnotation&,
                         const HypothesisAnnotation&) = default;
};

struct GraphEdge {
  std::string source;
  std::string target;
  std::string label;
  Origin origin = Origin::kObserved;
  std::optional<HypothesisAnnotation> hypothesis;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct SensemakingGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  SolutionSet solution;

  friend bool operator==(const SensemakingGraph&,
                         const SensemakingGraph&) = default;
};

// Observed layer (existents, events, participation edges), concept layer
// (one node per linked or affective-target concept plus linking edges), and
// one edge per accepted hypothesis tagged with its effective score.
absl::StatusOr<SensemakingGraph> BuildSensemakingGraph(
    const SceneGraphSequence& sequence, const HypothesisPool& pool,
    const SolutionSet& solution);

std::string ExportJson(const SensemakingGraph& graph);
absl::StatusOr<SensemakingGraph> ParseGraphJson(absl::string_view text);

// Graphviz digraph. Hypothesis edges are blue (is), orange (sequence) or
// green (affective) with penwidth max(0.5, score); concept links are purple.
std::string ExportDot(const SensemakingGraph& graph);

// Shortest fixed-point rendering with at least one decimal ("2.0", "2.915").
std::string FormatDecimal(double value);

}  // namespace sensemaking

#endif  // SENSEMAKING_EXPORT_H_
