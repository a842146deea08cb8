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

#include "sensemaking/knowledge_base.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace sensemaking {

namespace {

constexpr const char* kCausalRelations[] = {
    "Causes", "HasSubevent", "HasFirstSubevent", "HasLastSubevent",
    "HasPrerequisite"};
constexpr const char* kAffectiveRelations[] = {"MotivatedByGoal",
                                               "CausesDesire", "Desires"};
constexpr const char* kReferentialRelations[] = {"Synonym", "FormOf"};
constexpr const char* kIgnoredRelations[] = {
    "RelatedTo",       "IsA",
    "PartOf",          "HasA",
    "UsedFor",         "CapableOf",
    "AtLocation",      "HasProperty",
    "ObstructedBy",    "CreatedBy",
    "Antonym",         "DistinctFrom",
    "DerivedFrom",     "SymbolOf",
    "DefinedAs",       "MannerOf",
    "LocatedNear",     "HasContext",
    "SimilarTo",       "EtymologicallyRelatedTo",
    "EtymologicallyDerivedFrom", "MadeOf",
    "ReceivesAction",  "ExternalURL",
    "NotDesires",      "NotUsedFor",
    "NotCapableOf",    "NotHasProperty",
    "InstanceOf",      "Entails",
    "NotHasA",         "NotIsA"};

const std::vector<KnowledgeBase::Adjacent> kNoAdjacent;

}  // namespace

CategoryConfig CategoryConfig::Default() {
  CategoryConfig config;
  for (const char* r : kCausalRelations) {
    config.relations.emplace(r, CoherenceCategory::kCausal);
  }
  for (const char* r : kAffectiveRelations) {
    config.relations.emplace(r, CoherenceCategory::kAffective);
  }
  for (const char* r : kReferentialRelations) {
    config.relations.emplace(r, CoherenceCategory::kReferential);
  }
  for (const char* r : kIgnoredRelations) {
    config.relations.emplace(r, CoherenceCategory::kIgnored);
  }
  for (const char* c : {"person", "animal", "man", "woman", "dog", "horse"}) {
    config.character_concepts.push_back(ConceptId{c});
  }
  return config;
}

std::optional<CoherenceCategory> CategoryConfig::Lookup(
    absl::string_view relation) const {
  const auto it = relations.find(relation);
  if (it == relations.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<KnowledgeBase> KnowledgeBase::Build(std::vector<KBEdge> edges,
                                                   CategoryConfig config) {
  KnowledgeBase kb;
  std::set<ConceptId> concepts;
  std::vector<std::pair<KBEdge, CoherenceCategory>> kept;
  for (KBEdge& e : edges) {
    if (!(e.weight >= 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e.start.value, " ", e.relation, " ",
                       e.end.value, " has negative weight ", e.weight));
    }
    const std::optional<CoherenceCategory> category = config.Lookup(e.relation);
    if (!category.has_value() && !config.ignore_unknown_relations) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown relation '", e.relation, "'"));
    }
    concepts.insert(e.start);
    concepts.insert(e.end);
    if (e.relation == config.taxonomy_relation) kb.taxonomy_.push_back(e);
    if (!category.has_value() || *category == CoherenceCategory::kIgnored) {
      continue;
    }
    kept.emplace_back(std::move(e), *category);
  }

  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::sort(kb.taxonomy_.begin(), kb.taxonomy_.end());
  kb.taxonomy_.erase(std::unique(kb.taxonomy_.begin(), kb.taxonomy_.end()),
                     kb.taxonomy_.end());

  kb.concepts_.assign(concepts.begin(), concepts.end());
  kb.incident_.resize(kb.concepts_.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    kb.edges_.push_back(kept[i].first);
    kb.categories_.push_back(kept[i].second);
    const KBEdge& e = kb.edges_.back();
    kb.incident_[*kb.IndexOf(e.start)].push_back({i, false});
    if (e.end != e.start) kb.incident_[*kb.IndexOf(e.end)].push_back({i, true});
  }
  kb.config_ = std::move(config);
  return kb;
}

std::optional<std::size_t> KnowledgeBase::IndexOf(
    const ConceptId& concept_id) const {
  const auto it =
      std::lower_bound(concepts_.begin(), concepts_.end(), concept_id);
  if (it == concepts_.end() || *it != concept_id) return std::nullopt;
  return static_cast<std::size_t>(it - concepts_.begin());
}

std::optional<ConceptId> KnowledgeBase::FindConcept(
    absl::string_view label) const {
  ConceptId candidate{std::string(label)};
  if (IndexOf(candidate).has_value()) return candidate;
  return std::nullopt;
}

bool KnowledgeBase::Contains(const ConceptId& concept_id) const {
  return IndexOf(concept_id).has_value();
}

const std::vector<KnowledgeBase::Adjacent>& KnowledgeBase::Incident(
    const ConceptId& concept_id) const {
  const std::optional<std::size_t> index = IndexOf(concept_id);
  if (!index.has_value()) return kNoAdjacent;
  return incident_[*index];
}

bool KnowledgeBase::IsCharacter(const ConceptId& concept_id) const {
  const std::set<ConceptId> roots(config_.character_concepts.begin(),
                                  config_.character_concepts.end());
  std::set<ConceptId> frontier{concept_id};
  std::set<ConceptId> seen = frontier;
  for (int hop = 0;; ++hop) {
    for (const ConceptId& c : frontier) {
      if (roots.contains(c)) return true;
    }
    if (hop == config_.character_max_hops) return false;
    std::set<ConceptId> next;
    for (const ConceptId& c : frontier) {
      auto it = std::lower_bound(
          taxonomy_.begin(), taxonomy_.end(), c,
          [](const KBEdge& e, const ConceptId& id) { return e.start < id; });
      for (; it != taxonomy_.end() && it->start == c; ++it) {
        if (seen.insert(it->end).second) next.insert(it->end);
      }
    }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
}

}  // namespace sensemaking
