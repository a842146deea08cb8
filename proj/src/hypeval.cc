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

#include "sensemaking/hypeval.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace sensemaking {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::pair<std::string, std::string> Unordered(absl::string_view a,
                                              absl::string_view b) {
  if (b < a) std::swap(a, b);
  return {std::string(a), std::string(b)};
}

double ResolveScore(const HypothesisPool& pool, std::size_t index,
                    const std::vector<bool>& accepted, std::size_t depth) {
  double score = pool.own_score(index);
  // Premise chains are acyclic for generated pools; the depth cap only guards
  // hand-built ones.
  if (depth >= pool.size()) return score;
  for (const std::size_t premise : pool.premises(index)) {
    if (accepted[premise]) {
      score += ResolveScore(pool, premise, accepted, depth + 1);
    }
  }
  return score;
}

}  // namespace

HypothesisPool::HypothesisPool(std::vector<Hypothesis> hypotheses)
    : hypotheses_(std::move(hypotheses)) {
  for (std::size_t i = 0; i < hypotheses_.size(); ++i) {
    const Hypothesis& h = hypotheses_[i];
    index_.emplace(h.id, i);
    if (h.kind == HypothesisKind::kReferentialIs) {
      referential_.emplace(Unordered(h.subject, h.object), i);
    }
  }
  for (const Hypothesis& h : hypotheses_) {
    own_scores_.push_back(OwnEvidenceScore(h));
    std::vector<std::size_t>& refs = premises_.emplace_back();
    for (const Evidence& e : h.evidence) {
      const auto* ref = std::get_if<PremiseRef>(&e.provenance);
      if (e.kind != EvidenceKind::kPremise || ref == nullptr) continue;
      if (const auto it = index_.find(ref->hypothesis_id); it != index_.end()) {
        refs.push_back(it->second);
      }
    }
  }
}

std::optional<std::size_t> HypothesisPool::IndexOf(absl::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> HypothesisPool::FindReferential(
    absl::string_view a, absl::string_view b) const {
  const auto it = referential_.find(Unordered(a, b));
  if (it == referential_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<std::vector<bool>> HypothesisPool::MaskOf(
    const std::vector<std::string>& ids) const {
  std::vector<bool> mask(size(), false);
  for (const std::string& id : ids) {
    const std::optional<std::size_t> index = IndexOf(id);
    if (!index.has_value()) {
      return absl::NotFoundError(absl::StrCat("unknown hypothesis '", id, "'"));
    }
    mask[*index] = true;
  }
  return mask;
}

std::vector<std::string> HypothesisPool::IdsOf(
    const std::vector<bool>& mask) const {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) ids.push_back(hypotheses_[i].id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

absl::Status ObjectiveWeights::Validate() const {
  if (!(connectivity >= 0.0 && density >= 0.0 && support >= 0.0)) {
    return absl::InvalidArgumentError("objective weights must be non-negative");
  }
  if (connectivity == 0.0 && density == 0.0 && support == 0.0) {
    return absl::InvalidArgumentError("objective weights must not all be zero");
  }
  return absl::OkStatus();
}

std::vector<std::vector<std::string>> IdentityClasses(
    const SceneGraphSequence& sequence, const std::vector<Hypothesis>& accepted) {
  std::vector<std::string> names;
  for (const ExistentNode& e : sequence.existents) names.push_back(e.id);
  for (const Hypothesis& h : accepted) {
    if (h.kind != HypothesisKind::kReferentialIs) continue;
    names.push_back(h.subject);
    names.push_back(h.object);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  auto index_of = [&names](const std::string& id) {
    return static_cast<std::size_t>(
        std::lower_bound(names.begin(), names.end(), id) - names.begin());
  };

  DisjointSets sets(names.size());
  for (const Hypothesis& h : accepted) {
    if (h.kind != HypothesisKind::kReferentialIs) continue;
    sets.Union(index_of(h.subject), index_of(h.object));
  }
  std::map<std::size_t, std::vector<std::string>> grouped;
  for (std::size_t i = 0; i < names.size(); ++i) {
    grouped[sets.Find(i)].push_back(names[i]);
  }
  std::vector<std::vector<std::string>> classes;
  for (auto& [root, members] : grouped) classes.push_back(std::move(members));
  return classes;
}

double EffectiveScore(const HypothesisPool& pool, std::size_t index,
                      const std::vector<bool>& accepted) {
  return ResolveScore(pool, index, accepted, 0);
}

absl::StatusOr<std::vector<FeasibilityViolation>> CheckFeasible(
    const std::vector<std::string>& ids, const HypothesisPool& pool,
    const SceneGraphSequence& sequence) {
  absl::StatusOr<std::vector<bool>> mask = pool.MaskOf(ids);
  if (!mask.ok()) return mask.status();

  std::vector<Hypothesis> accepted;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((*mask)[i]) accepted.push_back(pool.at(i));
  }

  std::map<std::string, int, std::less<>> image_of;
  for (const ExistentNode& e : sequence.existents) {
    image_of.emplace(e.id, e.image_index);
  }
  auto image = [&image_of](const std::string& id) {
    const auto it = image_of.find(id);
    return it == image_of.end() ? -1 : it->second;
  };

  std::vector<FeasibilityViolation> violations;
  for (const std::vector<std::string>& members :
       IdentityClasses(sequence, accepted)) {
    if (members.size() < 2) continue;
    std::map<int, std::vector<std::string>> per_image;
    for (const std::string& m : members) per_image[image(m)].push_back(m);
    for (const auto& [img, same] : per_image) {
      if (same.size() > 1) {
        violations.push_back(
            {FeasibilityViolation::Constraint::kNonRedundancy,
             absl::StrCat("identity class {", absl::StrJoin(members, ", "),
                          "} holds ", absl::StrJoin(same, ", "),
                          " from image ", img)});
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (image(members[i]) == image(members[j])) continue;
        const std::optional<std::size_t> direct =
            pool.FindReferential(members[i], members[j]);
        if (!direct.has_value() || !(*mask)[*direct]) {
          violations.push_back(
              {FeasibilityViolation::Constraint::kTransitivity,
               absl::StrCat(members[i], " and ", members[j],
                            " share an identity class but '",
                            ReferentialId(members[i], members[j]),
                            "' is not accepted")});
        }
      }
    }
  }

  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((*mask)[i] && !(EffectiveScore(pool, i, *mask) > 0.0)) {
      violations.push_back({FeasibilityViolation::Constraint::kZeroSupport,
                            absl::StrCat("'", pool.at(i).id,
                                         "' has no effective evidence")});
    }
  }
  return violations;
}

absl::StatusOr<double> EffectiveSupport(const std::vector<std::string>& ids,
                                        const HypothesisPool& pool) {
  absl::StatusOr<std::vector<bool>> mask = pool.MaskOf(ids);
  if (!mask.ok()) return mask.status();
  double total = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((*mask)[i]) total += EffectiveScore(pool, i, *mask);
  }
  return total;
}

Evaluator::Evaluator(const SceneGraphSequence& sequence,
                     const HypothesisPool& pool, ObjectiveWeights weights)
    : sequence_(sequence), pool_(pool), weights_(weights) {
  auto add_node = [this](const std::string& name) {
    const int index = skeleton_.graph.AddNode();
    skeleton_.node_names.push_back(name);
    node_index_.emplace(name, index);
  };
  for (const ExistentNode& e : sequence.existents) add_node(e.id);
  for (const EventEdge& ev : sequence.events) add_node(ev.id);
  auto node = [this](absl::string_view name) {
    const auto it = node_index_.find(name);
    return it == node_index_.end() ? -2 : it->second;
  };
  for (const EventEdge& ev : sequence.events) {
    const int event = node(ev.id);
    const int subject = node(ev.subject_id);
    if (subject >= 0) skeleton_.graph.AddEdge(event, subject);
    if (ev.object_id.has_value()) {
      const int object = node(*ev.object_id);
      if (object >= 0) skeleton_.graph.AddEdge(event, object);
    }
  }
  for (const Hypothesis& h : pool.hypotheses()) {
    const int subject = node(h.subject);
    const int object =
        h.kind == HypothesisKind::kAffective ? -1 : node(h.object);
    hypothesis_endpoints_.emplace_back(subject, object);
  }
  const std::vector<bool> all(pool.size(), true);
  total_raw_support_ = Support(all);
}

double Evaluator::Support(const std::vector<bool>& accepted) const {
  double total = 0.0;
  for (std::size_t i = 0; i < pool_.size(); ++i) {
    if (accepted[i]) total += EffectiveScore(pool_, i, accepted);
  }
  return total;
}

ObjectiveGraph Evaluator::BuildGraph(const std::vector<bool>& accepted) const {
  ObjectiveGraph out = skeleton_;
  std::set<std::string> targets;
  for (std::size_t i = 0; i < pool_.size(); ++i) {
    if (accepted[i] && pool_.at(i).kind == HypothesisKind::kAffective) {
      targets.insert(pool_.at(i).object);
    }
  }
  std::map<std::string, int, std::less<>> concept_node;
  for (const std::string& t : targets) {
    concept_node.emplace(t, out.graph.AddNode());
    out.node_names.push_back(absl::StrCat(kConceptNodePrefix, t));
  }
  for (std::size_t i = 0; i < pool_.size(); ++i) {
    if (!accepted[i]) continue;
    auto [u, v] = hypothesis_endpoints_[i];
    if (v == -1) v = concept_node.at(pool_.at(i).object);
    if (u >= 0 && v >= 0) out.graph.AddEdge(u, v);
  }
  return out;
}

SolutionSet Evaluator::Evaluate(const std::vector<bool>& accepted) const {
  SolutionSet s;
  s.accepted = pool_.IdsOf(accepted);
  s.objectives.support = Support(accepted);
  const ObjectiveGraph g = BuildGraph(accepted);
  s.objectives.connectivity = VertexConnectivity(g.graph);
  s.objectives.density = Density(g.graph);
  const int n = g.graph.num_nodes();
  const double normalized_connectivity =
      n >= 2 ? s.objectives.connectivity / static_cast<double>(n - 1) : 0.0;
  const double normalized_support =
      total_raw_support_ > 0.0 ? s.objectives.support / total_raw_support_ : 0.0;
  s.scalar_score = weights_.connectivity * normalized_connectivity +
                   weights_.density * s.objectives.density +
                   weights_.support * normalized_support;
  return s;
}

absl::StatusOr<ObjectiveGraph> BuildObjectiveGraph(
    const SceneGraphSequence& sequence, const HypothesisPool& pool,
    const std::vector<std::string>& ids) {
  absl::StatusOr<std::vector<bool>> mask = pool.MaskOf(ids);
  if (!mask.ok()) return mask.status();
  return Evaluator(sequence, pool, ObjectiveWeights{}).BuildGraph(*mask);
}

bool Better(const SolutionSet& a, const SolutionSet& b) {
  if (a.scalar_score != b.scalar_score) return a.scalar_score > b.scalar_score;
  if (a.objectives.support != b.objectives.support) {
    return a.objectives.support > b.objectives.support;
  }
  if (a.objectives.density != b.objectives.density) {
    return a.objectives.density > b.objectives.density;
  }
  if (a.objectives.connectivity != b.objectives.connectivity) {
    return a.objectives.connectivity > b.objectives.connectivity;
  }
  return a.accepted < b.accepted;
}

bool Dominates(const Objectives& a, const Objectives& b) {
  const bool no_worse = a.connectivity >= b.connectivity &&
                        a.density >= b.density && a.support >= b.support;
  const bool strictly = a.connectivity > b.connectivity ||
                        a.density > b.density || a.support > b.support;
  return no_worse && strictly;
}

}  // namespace sensemaking
