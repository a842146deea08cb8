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

#include "sensemaking/hypgen.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace sensemaking {

namespace {

void SortCanonical(std::vector<Hypothesis>& hypotheses) {
  std::sort(hypotheses.begin(), hypotheses.end(),
            [](const Hypothesis& a, const Hypothesis& b) {
              return std::tie(a.subject, a.object, a.id) <
                     std::tie(b.subject, b.object, b.id);
            });
}

// Highest count per normalized attribute name.
std::map<std::string, int> AttributeCounts(const ExistentNode& e) {
  std::map<std::string, int> counts;
  for (const Attribute& a : e.attributes) {
    const std::string name = NormalizeAttributeName(a.name);
    int& slot = counts[name];
    slot = std::max(slot, a.annotator_count);
  }
  return counts;
}

std::vector<std::string> Participants(const EventEdge& ev) {
  std::vector<std::string> out{ev.subject_id};
  if (ev.object_id.has_value() && *ev.object_id != ev.subject_id) {
    out.push_back(*ev.object_id);
  }
  return out;
}

std::pair<std::string, std::string> UnorderedKey(const std::string& a,
                                                 const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::vector<Hypothesis> GenerateReferential(const SceneGraphSequence& sequence) {
  std::vector<const ExistentNode*> linked;
  for (const ExistentNode& e : sequence.existents) {
    if (e.concept_id.has_value()) linked.push_back(&e);
  }
  std::sort(linked.begin(), linked.end(),
            [](const ExistentNode* a, const ExistentNode* b) {
              return std::tie(a->image_index, a->id) <
                     std::tie(b->image_index, b->id);
            });

  std::vector<Hypothesis> out;
  for (std::size_t i = 0; i < linked.size(); ++i) {
    const ExistentNode& a = *linked[i];
    const std::map<std::string, int> a_counts = AttributeCounts(a);
    for (std::size_t j = i + 1; j < linked.size(); ++j) {
      const ExistentNode& b = *linked[j];
      if (a.image_index == b.image_index || a.concept_id != b.concept_id) {
        continue;
      }
      Hypothesis h;
      h.id = ReferentialId(a.id, b.id);
      h.kind = HypothesisKind::kReferentialIs;
      h.subject = a.id;
      h.object = b.id;
      h.evidence.push_back({EvidenceKind::kKnowledge, 1.0,
                            KnowledgePath{*a.concept_id, {}}});
      for (const auto& [name, b_count] : AttributeCounts(b)) {
        const auto it = a_counts.find(name);
        if (it == a_counts.end()) continue;
        h.evidence.push_back(
            {EvidenceKind::kObservational,
             static_cast<double>(std::min(it->second, b_count)),
             AttributeMatch{name, it->second, b_count}});
      }
      out.push_back(std::move(h));
    }
  }
  SortCanonical(out);
  return out;
}

std::vector<Hypothesis> GenerateCausal(const SceneGraphSequence& sequence,
                                       const KnowledgeBase& kb,
                                       const std::vector<Hypothesis>& referential,
                                       const GenerationOptions& options) {
  std::map<std::pair<std::string, std::string>, std::string> is_candidates;
  for (const Hypothesis& h : referential) {
    if (h.kind != HypothesisKind::kReferentialIs) continue;
    is_candidates.emplace(UnorderedKey(h.subject, h.object), h.id);
  }

  std::vector<Hypothesis> out;
  for (const EventEdge& first : sequence.events) {
    for (const EventEdge& second : sequence.events) {
      if (first.image_index >= second.image_index) continue;
      Hypothesis h;
      h.id = CausalId(first.id, second.id);
      h.kind = HypothesisKind::kCausalSequence;
      h.subject = first.id;
      h.object = second.id;

      if (first.concept_id.has_value() && second.concept_id.has_value()) {
        for (const KBPath& path :
             FindPaths(kb, *first.concept_id, *second.concept_id,
                       CoherenceCategory::kCausal, options.max_path_len)) {
          h.evidence.push_back({EvidenceKind::kKnowledge, PathScore(path),
                                KnowledgePath{*first.concept_id, path.steps}});
        }
      }

      for (const std::string& p : Participants(first)) {
        for (const std::string& q : Participants(second)) {
          if (p == q) {
            // Cannot happen for validated input (participants share their
            // event's image), but the shared node outranks any premise.
            h.evidence.push_back({EvidenceKind::kObservational,
                                  options.exact_match_r, SharedExistent{p}});
            continue;
          }
          const auto it = is_candidates.find(UnorderedKey(p, q));
          if (it != is_candidates.end()) {
            h.evidence.push_back(
                {EvidenceKind::kPremise, 0.0, PremiseRef{it->second}});
          }
        }
      }
      if (!h.evidence.empty()) out.push_back(std::move(h));
    }
  }
  SortCanonical(out);
  return out;
}

std::vector<Hypothesis> GenerateAffective(const SceneGraphSequence& sequence,
                                          const KnowledgeBase& kb) {
  std::map<std::string, Hypothesis> by_id;
  for (const EventEdge& ev : sequence.events) {
    if (!ev.concept_id.has_value()) continue;
    const std::vector<AffectiveNeighbor> neighbors =
        AffectiveNeighbors(kb, *ev.concept_id);
    if (neighbors.empty()) continue;
    for (const std::string& participant : Participants(ev)) {
      const ExistentNode* e = sequence.FindExistent(participant);
      if (e == nullptr || !e->concept_id.has_value() ||
          !kb.IsCharacter(*e->concept_id)) {
        continue;
      }
      for (const AffectiveNeighbor& n : neighbors) {
        Hypothesis h;
        h.id = AffectiveId(e->id, n.relation, n.target);
        h.kind = HypothesisKind::kAffective;
        h.relation = n.relation;
        h.subject = e->id;
        h.object = n.target.value;
        h.evidence.push_back(
            {EvidenceKind::kKnowledge, n.weight,
             KnowledgePath{*ev.concept_id,
                           {PathStep{KBEdge{*ev.concept_id, n.relation,
                                            n.target, n.weight},
                                     false}}}});
        // The same character in two events of one concept yields one
        // hypothesis; the first event's evidence is kept.
        by_id.try_emplace(h.id, std::move(h));
      }
    }
  }
  std::vector<Hypothesis> out;
  for (auto& [id, h] : by_id) out.push_back(std::move(h));
  SortCanonical(out);
  return out;
}

std::vector<Hypothesis> GenerateAll(const SceneGraphSequence& sequence,
                                    const KnowledgeBase& kb,
                                    const GenerationOptions& options) {
  std::vector<Hypothesis> pool = GenerateReferential(sequence);
  std::vector<Hypothesis> causal = GenerateCausal(sequence, kb, pool, options);
  std::vector<Hypothesis> affective = GenerateAffective(sequence, kb);
  pool.insert(pool.end(), std::make_move_iterator(causal.begin()),
              std::make_move_iterator(causal.end()));
  pool.insert(pool.end(), std::make_move_iterator(affective.begin()),
              std::make_move_iterator(affective.end()));
  return pool;
}

}  // namespace sensemaking
