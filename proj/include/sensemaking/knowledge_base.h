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

#ifndef SENSEMAKING_KNOWLEDGE_BASE_H_
#define SENSEMAKING_KNOWLEDGE_BASE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sensemaking/core_model.h"

namespace sensemaking {

// Maps knowledge-base relation names onto coherence categories and names the
// concepts that count as animate roots for character detection.
struct CategoryConfig {
  std::map<std::string, CoherenceCategory, std::less<>> relations;
  std::vector<ConceptId> character_concepts;
  bool ignore_unknown_relations = false;
  // Relation walked for character detection.
  std::string taxonomy_relation = "IsA";
  int character_max_hops = 2;
  // Language kept when reading a ConceptNet assertion dump.
  std::string language = "en";

  // ConceptNet 5 relation vocabulary. Causes, HasSubevent, HasFirstSubevent,
  // HasLastSubevent and HasPrerequisite are causal; MotivatedByGoal,
  // CausesDesire and Desires are affective; Synonym and FormOf are
  // referential; every other known relation is ignored.
  static CategoryConfig Default();

  // Category of `relation`, or nullopt if the name is not in the map.
  std::optional<CoherenceCategory> Lookup(absl::string_view relation) const;
};

// Immutable, weighted concept graph. Edges whose relation is categorized as
// ignored are dropped from path search, but every concept they mention stays
// linkable, and taxonomy (IsA) edges are kept aside for character detection.
class KnowledgeBase {
 public:
  struct Adjacent {
    std::size_t edge;
    bool inverse;
  };

  KnowledgeBase() = default;

  // Fails on a negative weight, or on a relation missing from the config
  // unless `ignore_unknown_relations` is set. Input order does not matter.
  static absl::StatusOr<KnowledgeBase> Build(std::vector<KBEdge> edges,
                                             CategoryConfig config);

  std::optional<ConceptId> FindConcept(absl::string_view label) const;
  bool Contains(const ConceptId& concept_id) const;

  // Categorized edges sorted by (start, relation, end, weight).
  const std::vector<KBEdge>& edges() const { return edges_; }
  CoherenceCategory category(std::size_t edge) const { return categories_[edge]; }

  // Edges touching `concept_id`, both stored directions, in edge order.
  const std::vector<Adjacent>& Incident(const ConceptId& concept_id) const;

  // True if the concept is a character root or reaches one through at most
  // `character_max_hops` taxonomy edges.
  bool IsCharacter(const ConceptId& concept_id) const;

  const CategoryConfig& config() const { return config_; }
  std::size_t num_concepts() const { return concepts_.size(); }
  const std::vector<ConceptId>& concepts() const { return concepts_; }

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.edges_ == b.edges_ && a.concepts_ == b.concepts_ &&
           a.taxonomy_ == b.taxonomy_;
  }

 private:
  std::optional<std::size_t> IndexOf(const ConceptId& concept_id) const;

  CategoryConfig config_;
  std::vector<ConceptId> concepts_;  // sorted
  std::vector<KBEdge> edges_;
  std::vector<CoherenceCategory> categories_;
  std::vector<std::vector<Adjacent>> incident_;  // per concept index
  std::vector<KBEdge> taxonomy_;                 // sorted
};

}  // namespace sensemaking

#endif  // SENSEMAKING_KNOWLEDGE_BASE_H_
