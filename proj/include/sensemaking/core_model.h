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

// Shared domain types: scene graphs, knowledge-base edges, hypotheses and
// their evidence, and accepted solution sets. Everything here is a plain value
// type; the only behavior is normalization and invariant checking.

#ifndef SENSEMAKING_CORE_MODEL_H_
#define SENSEMAKING_CORE_MODEL_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/strings/string_view.h"

namespace sensemaking {

// A knowledge-base concept, identified by its normalized label
// (e.g. "play_frisbee").
struct ConceptId {
  std::string value;

  friend auto operator<=>(const ConceptId&, const ConceptId&) = default;
  friend bool operator==(const ConceptId&, const ConceptId&) = default;
};

struct Attribute {
  std::string name;
  int annotator_count = 1;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

// An object, character, or location observed in one image.
struct ExistentNode {
  std::string id;
  int image_index = 0;
  std::string label;
  std::vector<Attribute> attributes;
  std::optional<ConceptId> concept_id;

  friend bool operator==(const ExistentNode&, const ExistentNode&) = default;
};

// A relationship triple (subject, predicate, optional object) inside one
// image. Events are graph nodes in their own right.
struct EventEdge {
  std::string id;
  int image_index = 0;
  std::string predicate;
  std::string subject_id;
  std::optional<std::string> object_id;
  std::optional<ConceptId> concept_id;

  friend bool operator==(const EventEdge&, const EventEdge&) = default;
};

struct ImageInfo {
  int index = 0;
  // Free-form source reference (e.g. a Visual Genome image id); may be empty.
  std::string source;

  friend bool operator==(const ImageInfo&, const ImageInfo&) = default;
};

struct SceneGraphSequence {
  std::vector<ImageInfo> images;
  std::vector<ExistentNode> existents;
  std::vector<EventEdge> events;

  const ExistentNode* FindExistent(absl::string_view id) const;
  const EventEdge* FindEvent(absl::string_view id) const;

  friend bool operator==(const SceneGraphSequence&,
                         const SceneGraphSequence&) = default;
};

enum class CoherenceCategory {
  kReferential,
  kCausal,
  kAffective,
  kSpatial,
  kTemporal,
  kIgnored,
};

absl::string_view CategoryName(CoherenceCategory category);
std::optional<CoherenceCategory> ParseCategory(absl::string_view name);

struct KBEdge {
  ConceptId start;
  std::string relation;
  ConceptId end;
  double weight = 0.0;

  friend auto operator<=>(const KBEdge&, const KBEdge&) = default;
  friend bool operator==(const KBEdge&, const KBEdge&) = default;
};

// One edge of a knowledge-base path. `inverse` is set when the path walks the
// stored edge from `end` to `start`.
struct PathStep {
  KBEdge edge;
  bool inverse = false;

  const ConceptId& From() const { return inverse ? edge.end : edge.start; }
  const ConceptId& To() const { return inverse ? edge.start : edge.end; }

  friend auto operator<=>(const PathStep&, const PathStep&) = default;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

enum class EvidenceKind { kObservational, kKnowledge, kPremise };

absl::string_view EvidenceKindName(EvidenceKind kind);

// Two existents share a normalized attribute.
struct AttributeMatch {
  std::string attribute;
  int subject_count = 1;
  int object_count = 1;

  friend bool operator==(const AttributeMatch&, const AttributeMatch&) = default;
};

// The same scene-graph node takes part in both events of a causal candidate.
struct SharedExistent {
  std::string existent_id;

  friend bool operator==(const SharedExistent&, const SharedExistent&) = default;
};

// A knowledge-base path; empty for the 0-length path through `anchor`.
struct KnowledgePath {
  ConceptId anchor;
  std::vector<PathStep> steps;

  friend bool operator==(const KnowledgePath&, const KnowledgePath&) = default;
};

struct PremiseRef {
  std::string hypothesis_id;

  friend bool operator==(const PremiseRef&, const PremiseRef&) = default;
};

using Provenance =
    std::variant<AttributeMatch, SharedExistent, KnowledgePath, PremiseRef>;

struct Evidence {
  EvidenceKind kind = EvidenceKind::kKnowledge;
  // Unused (0) for premise evidence, whose value depends on the accepted set.
  double score = 0.0;
  Provenance provenance;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

enum class HypothesisKind { kReferentialIs, kCausalSequence, kAffective };

absl::string_view HypothesisKindName(HypothesisKind kind);
std::optional<HypothesisKind> ParseHypothesisKind(absl::string_view name);

struct Hypothesis {
  std::string id;
  HypothesisKind kind = HypothesisKind::kReferentialIs;
  // Affective relation name (e.g. "CausesDesire"); empty for other kinds.
  std::string relation;
  // Existent id (referential, affective) or event id (causal).
  std::string subject;
  // Existent id, event id, or for affective hypotheses a concept label.
  std::string object;
  std::vector<Evidence> evidence;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

// Sum of the non-premise evidence scores.
double OwnEvidenceScore(const Hypothesis& hypothesis);

// Symmetric: the two existent ids appear in ascending order.
std::string ReferentialId(absl::string_view a, absl::string_view b);
std::string CausalId(absl::string_view from_event, absl::string_view to_event);
std::string AffectiveId(absl::string_view character, absl::string_view relation,
                        const ConceptId& target);

struct Objectives {
  int connectivity = 0;
  double density = 0.0;
  double support = 0.0;

  friend bool operator==(const Objectives&, const Objectives&) = default;
};

struct SolutionSet {
  // Sorted ascending.
  std::vector<std::string> accepted;
  Objectives objectives;
  double scalar_score = 0.0;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

struct Violation {
  enum class Code {
    kDuplicateId,
    kBadAnnotatorCount,
    kBadImageIndex,
    kMissingParticipant,
    kParticipantInOtherImage,
    kNonContiguousImages,
  };
  Code code;
  std::string message;
};

// Checks every scene-graph invariant. Returns all violations; empty means
// the sequence is well formed.
std::vector<Violation> Validate(const SceneGraphSequence& sequence);

// Lowercase, trimmed, internal whitespace collapsed to a single space.
std::string NormalizeAttributeName(absl::string_view name);

// Lowercase, trimmed, internal whitespace collapsed to a single underscore.
std::string NormalizeConceptLabel(absl::string_view label);

}  // namespace sensemaking

template <>
struct std::hash<sensemaking::ConceptId> {
  std::size_t operator()(const sensemaking::ConceptId& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};

#endif  // SENSEMAKING_CORE_MODEL_H_
