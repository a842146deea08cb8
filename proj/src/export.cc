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

#include "sensemaking/export.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "sensemaking/core_json.h"

namespace sensemaking {

using nlohmann::json;

namespace {

std::string ConceptNodeId(const ConceptId& c) {
  return absl::StrCat(kConceptNodePrefix, c.value);
}

std::optional<Origin> ParseOrigin(absl::string_view name) {
  for (const Origin o : {Origin::kObserved, Origin::kConcept, Origin::kHypothesis}) {
    if (OriginName(o) == name) return o;
  }
  return std::nullopt;
}

std::string DotQuote(absl::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

absl::string_view HypothesisColor(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::kReferentialIs:
      return "blue";
    case HypothesisKind::kCausalSequence:
      return "orange";
    case HypothesisKind::kAffective:
      return "green";
  }
  return "black";
}

}  // namespace

absl::string_view OriginName(Origin origin) {
  switch (origin) {
    case Origin::kObserved:
      return "observed";
    case Origin::kConcept:
      return "concept";
    case Origin::kHypothesis:
      return "hypothesis";
  }
  return "observed";
}

absl::StatusOr<SensemakingGraph> BuildSensemakingGraph(
    const SceneGraphSequence& sequence, const HypothesisPool& pool,
    const SolutionSet& solution) {
  absl::StatusOr<std::vector<bool>> mask = pool.MaskOf(solution.accepted);
  if (!mask.ok()) return mask.status();

  SensemakingGraph g;
  g.solution = solution;
  for (const ExistentNode& e : sequence.existents) {
    g.nodes.push_back({e.id, "existent", e.label, e.image_index, Origin::kObserved});
  }
  for (const EventEdge& ev : sequence.events) {
    g.nodes.push_back(
        {ev.id, "event", ev.predicate, ev.image_index, Origin::kObserved});
  }

  std::set<ConceptId> concepts;
  for (const ExistentNode& e : sequence.existents) {
    if (e.concept_id.has_value()) concepts.insert(*e.concept_id);
  }
  for (const EventEdge& ev : sequence.events) {
    if (ev.concept_id.has_value()) concepts.insert(*ev.concept_id);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((*mask)[i] && pool.at(i).kind == HypothesisKind::kAffective) {
      concepts.insert(ConceptId{pool.at(i).object});
    }
  }
  for (const ConceptId& c : concepts) {
    g.nodes.push_back({ConceptNodeId(c), "concept", c.value, std::nullopt,
                       Origin::kConcept});
  }

  for (const EventEdge& ev : sequence.events) {
    g.edges.push_back({ev.subject_id, ev.id, "subject", Origin::kObserved, {}});
    if (ev.object_id.has_value()) {
      g.edges.push_back({ev.id, *ev.object_id, "object", Origin::kObserved, {}});
    }
  }
  for (const ExistentNode& e : sequence.existents) {
    if (e.concept_id.has_value()) {
      g.edges.push_back(
          {e.id, ConceptNodeId(*e.concept_id), "concept", Origin::kConcept, {}});
    }
  }
  for (const EventEdge& ev : sequence.events) {
    if (ev.concept_id.has_value()) {
      g.edges.push_back(
          {ev.id, ConceptNodeId(*ev.concept_id), "concept", Origin::kConcept, {}});
    }
  }

  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((*mask)[i]) accepted.push_back(i);
  }
  std::sort(accepted.begin(), accepted.end(), [&pool](std::size_t a, std::size_t b) {
    return pool.at(a).id < pool.at(b).id;
  });
  for (const std::size_t i : accepted) {
    const Hypothesis& h = pool.at(i);
    GraphEdge edge;
    edge.source = h.subject;
    edge.target = h.kind == HypothesisKind::kAffective
                      ? ConceptNodeId(ConceptId{h.object})
                      : h.object;
    edge.label = h.kind == HypothesisKind::kAffective
                     ? h.relation
                     : std::string(HypothesisKindName(h.kind));
    edge.origin = Origin::kHypothesis;
    edge.hypothesis = HypothesisAnnotation{
        h.id, h.kind, h.relation, EffectiveScore(pool, i, *mask), h.evidence};
    g.edges.push_back(std::move(edge));
  }
  return g;
}

std::string ExportJson(const SensemakingGraph& graph) {
  json nodes = json::array();
  for (const GraphNode& n : graph.nodes) {
    json node{{"id", n.id},
              {"kind", n.kind},
              {"label", n.label},
              {"origin", OriginName(n.origin)}};
    if (n.image_index.has_value()) node["image"] = *n.image_index;
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const GraphEdge& e : graph.edges) {
    json edge{{"source", e.source},
              {"target", e.target},
              {"label", e.label},
              {"origin", OriginName(e.origin)}};
    if (e.hypothesis.has_value()) {
      const HypothesisAnnotation& h = *e.hypothesis;
      json annotation{{"id", h.id},
                      {"kind", HypothesisKindName(h.kind)},
                      {"score", h.score},
                      {"evidence", h.evidence}};
      if (!h.relation.empty()) annotation["relation"] = h.relation;
      edge["hypothesis"] = std::move(annotation);
    }
    edges.push_back(std::move(edge));
  }
  const json doc{{"schema_version", kGraphSchemaVersion},
                 {"nodes", std::move(nodes)},
                 {"edges", std::move(edges)},
                 {"solution", graph.solution}};
  return doc.dump(2) + "\n";
}

absl::StatusOr<SensemakingGraph> ParseGraphJson(absl::string_view text) {
  const json doc = json::parse(text.begin(), text.end(), nullptr,
                               /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("graph JSON does not parse");
  }
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kGraphSchemaVersion) {
      return absl::InvalidArgumentError(
          absl::StrCat("unsupported graph schema version ", version));
    }
    SensemakingGraph g;
    for (const json& node : doc.at("nodes")) {
      GraphNode n;
      n.id = node.at("id").get<std::string>();
      n.kind = node.at("kind").get<std::string>();
      n.label = node.at("label").get<std::string>();
      if (node.contains("image")) n.image_index = node.at("image").get<int>();
      const auto origin = ParseOrigin(node.at("origin").get<std::string>());
      if (!origin.has_value()) return absl::InvalidArgumentError("bad node origin");
      n.origin = *origin;
      g.nodes.push_back(std::move(n));
    }
    for (const json& edge : doc.at("edges")) {
      GraphEdge e;
      e.source = edge.at("source").get<std::string>();
      e.target = edge.at("target").get<std::string>();
      e.label = edge.at("label").get<std::string>();
      const auto origin = ParseOrigin(edge.at("origin").get<std::string>());
      if (!origin.has_value()) return absl::InvalidArgumentError("bad edge origin");
      e.origin = *origin;
      if (edge.contains("hypothesis")) {
        const json& a = edge.at("hypothesis");
        HypothesisAnnotation h;
        h.id = a.at("id").get<std::string>();
        const auto kind = ParseHypothesisKind(a.at("kind").get<std::string>());
        if (!kind.has_value()) return absl::InvalidArgumentError("bad hypothesis kind");
        h.kind = *kind;
        h.relation = a.value("relation", std::string());
        h.score = a.at("score").get<double>();
        h.evidence = a.at("evidence").get<std::vector<Evidence>>();
        e.hypothesis = std::move(h);
      }
      g.edges.push_back(std::move(e));
    }
    g.solution = doc.at("solution").get<SolutionSet>();
    return g;
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed graph JSON: ", e.what()));
  }
}

std::string FormatDecimal(double value) {
  std::string text = absl::StrFormat("%.6f", value);
  while (text.size() > 1 && text.back() == '0' &&
         text[text.size() - 2] != '.') {
    text.pop_back();
  }
  return text;
}

std::string ExportDot(const SensemakingGraph& graph) {
  std::ostringstream out;
  out << "digraph sensemaking {\n";
  out << "  rankdir=LR;\n";
  for (const GraphNode& n : graph.nodes) {
    out << "  " << DotQuote(n.id) << " [label=" << DotQuote(n.label);
    if (n.kind == "event") {
      out << ", shape=diamond";
    } else if (n.kind == "concept") {
      out << ", shape=box, color=purple, fontcolor=purple";
    } else {
      out << ", shape=ellipse";
    }
    out << "];\n";
  }
  for (const GraphEdge& e : graph.edges) {
    out << "  " << DotQuote(e.source) << " -> " << DotQuote(e.target)
        << " [label=" << DotQuote(e.label);
    switch (e.origin) {
      case Origin::kObserved:
        out << ", color=black";
        break;
      case Origin::kConcept:
        out << ", color=purple, style=dashed";
        break;
      case Origin::kHypothesis:
        out << ", color=" << HypothesisColor(e.hypothesis->kind)
            << ", penwidth=" << FormatDecimal(std::max(0.5, e.hypothesis->score));
        break;
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sensemaking
