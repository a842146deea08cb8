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

#include "test_util.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "sensemaking/hypgen.h"
#include "sensemaking/ingest.h"

namespace sensemaking::testing {
namespace {

constexpr absl::string_view kLabels[] = {"cat", "ball", "tree"};
constexpr absl::string_view kPredicates[] = {"chasing", "rolling", "sleeping"};
constexpr absl::string_view kEventConcepts[] = {"chasing", "rolling",
                                                "sleeping", "play"};
constexpr double kWeights[] = {0.0, 0.5, 1.0, 1.5, 2.0};

bool Coin(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

KnowledgeBase RandomKnowledgeBase(std::mt19937_64& rng) {
  std::vector<KBEdge> edges = {
      {ConceptId{"cat"}, "IsA", ConceptId{"animal"}, 1.0},
      {ConceptId{"ball"}, "IsA", ConceptId{"toy"}, 1.0},
      {ConceptId{"tree"}, "IsA", ConceptId{"plant"}, 1.0},
  };
  for (std::size_t i = 0; i < std::size(kEventConcepts); ++i) {
    for (std::size_t j = i + 1; j < std::size(kEventConcepts); ++j) {
      if (!Coin(rng, 0.4)) continue;
      ConceptId a{std::string(kEventConcepts[i])};
      ConceptId b{std::string(kEventConcepts[j])};
      if (Coin(rng, 0.5)) std::swap(a, b);
      edges.push_back({a, Coin(rng, 0.5) ? "Causes" : "HasSubevent", b,
                       kWeights[Uniform(rng, 0, 4)]});
    }
  }
  for (const absl::string_view event : kPredicates) {
    if (Coin(rng, 0.5)) {
      edges.push_back({ConceptId{std::string(event)}, "MotivatedByGoal",
                       ConceptId{"fun"}, kWeights[Uniform(rng, 0, 4)]});
    }
    if (Coin(rng, 0.3)) {
      edges.push_back({ConceptId{std::string(event)}, "CausesDesire",
                       ConceptId{"rest"}, kWeights[Uniform(rng, 1, 4)]});
    }
  }
  CategoryConfig config = CategoryConfig::Default();
  config.character_concepts = {ConceptId{"animal"}};
  return *KnowledgeBase::Build(std::move(edges), std::move(config));
}

SceneGraphSequence RandomSequence(std::mt19937_64& rng,
                                  const RandomInstanceOptions& options) {
  SceneGraphSequence seq;
  const int num_images = Uniform(rng, 1, options.max_images);
  for (int i = 0; i < num_images; ++i) seq.images.push_back({i, ""});
  const int num_existents = Uniform(rng, 2, options.max_existents);
  for (int k = 0; k < num_existents; ++k) {
    ExistentNode e;
    e.label = std::string(kLabels[Uniform(rng, 0, 2)]);
    e.id = absl::StrCat(e.label, "-", k);
    e.image_index = Uniform(rng, 0, num_images - 1);
    for (const char* name : {"red", "big"}) {
      if (Coin(rng, 0.4)) e.attributes.push_back({name, Uniform(rng, 1, 3)});
    }
    seq.existents.push_back(std::move(e));
  }
  // Existents are grouped by image to keep the document readable.
  std::stable_sort(seq.existents.begin(), seq.existents.end(),
                   [](const ExistentNode& a, const ExistentNode& b) {
                     return a.image_index < b.image_index;
                   });
  if (!options.with_events) return seq;
  int next_event = 0;
  for (int i = 0; i < num_images; ++i) {
    std::vector<std::string> here;
    for (const ExistentNode& e : seq.existents) {
      if (e.image_index == i) here.push_back(e.id);
    }
    if (here.empty()) continue;
    const int n = Uniform(rng, 0, options.max_events_per_image);
    for (int k = 0; k < n; ++k) {
      EventEdge ev;
      ev.id = absl::StrCat("ev-", next_event++);
      ev.image_index = i;
      ev.predicate = std::string(kPredicates[Uniform(rng, 0, 2)]);
      ev.subject_id = here[Uniform(rng, 0, static_cast<int>(here.size()) - 1)];
      if (here.size() > 1 && Coin(rng, 0.7)) {
        std::string object = ev.subject_id;
        while (object == ev.subject_id) {
          object = here[Uniform(rng, 0, static_cast<int>(here.size()) - 1)];
        }
        ev.object_id = object;
      }
      seq.events.push_back(std::move(ev));
    }
  }
  return seq;
}

// Accepted referential ids for a partition of existents.
void AddClassPairs(const std::vector<std::vector<std::string>>& classes,
                   const HypothesisPool& pool, std::vector<bool>& mask) {
  for (const std::vector<std::string>& c : classes) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const std::optional<std::size_t> h = pool.FindReferential(c[i], c[j]);
        if (h.has_value()) mask[*h] = true;
      }
    }
  }
}

}  // namespace

std::string FixturePath(absl::string_view name) {
  return absl::StrCat(SENSEMAKING_FIXTURE_DIR, "/", name);
}

absl::StatusOr<Scenario> LoadScenario(absl::string_view scene_graphs,
                                      absl::string_view kb,
                                      absl::string_view config) {
  CategoryConfig categories = CategoryConfig::Default();
  if (!config.empty()) {
    absl::StatusOr<std::string> text = ReadFileToString(FixturePath(config));
    if (!text.ok()) return text.status();
    absl::StatusOr<CategoryConfig> parsed = ParseCategoryConfig(*text);
    if (!parsed.ok()) return parsed.status();
    categories = *std::move(parsed);
  }
  absl::StatusOr<std::string> kb_text = ReadFileToString(FixturePath(kb));
  if (!kb_text.ok()) return kb_text.status();
  absl::StatusOr<KnowledgeBase> loaded = LoadKnowledgeBase(
      *kb_text, KnowledgeBaseFormat::kCanonicalTsv, categories);
  if (!loaded.ok()) return loaded.status();
  absl::StatusOr<std::string> sg_text =
      ReadFileToString(FixturePath(scene_graphs));
  if (!sg_text.ok()) return sg_text.status();
  absl::StatusOr<SceneGraphSequence> seq =
      ParseSceneGraphs(*sg_text, SceneGraphFormat::kCanonical);
  if (!seq.ok()) return seq.status();
  Scenario s;
  s.sequence = LinkConcepts(*std::move(seq), *loaded);
  s.kb = *std::move(loaded);
  return s;
}

absl::StatusOr<Scenario> FrisbeeScenario() {
  return LoadScenario("frisbee.json", "mini.tsv", "cats.json");
}

absl::StatusOr<Scenario> HorseScenario() {
  return LoadScenario("horse.json", "horse.tsv");
}

RandomInstance MakeRandomInstance(std::mt19937_64& rng,
                                  const RandomInstanceOptions& options) {
  while (true) {
    RandomInstance inst;
    inst.scenario.kb = RandomKnowledgeBase(rng);
    inst.scenario.sequence =
        LinkConcepts(RandomSequence(rng, options), inst.scenario.kb);
    inst.hypotheses = GenerateAll(inst.scenario.sequence, inst.scenario.kb);
    if (static_cast<int>(inst.hypotheses.size()) <= options.max_hypotheses) {
      return inst;
    }
  }
}

std::vector<std::string> RandomClosedSet(std::mt19937_64& rng,
                                         const HypothesisPool& pool,
                                         const SceneGraphSequence& sequence) {
  std::vector<const ExistentNode*> order;
  for (const ExistentNode& e : sequence.existents) order.push_back(&e);
  std::shuffle(order.begin(), order.end(), rng);

  struct Group {
    std::string concept_label;
    std::set<int> images;
    std::vector<std::string> members;
  };
  std::vector<Group> groups;
  for (const ExistentNode* e : order) {
    std::vector<std::size_t> open;
    if (e->concept_id.has_value()) {
      for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].concept_label == e->concept_id->value &&
            !groups[g].images.contains(e->image_index)) {
          open.push_back(g);
        }
      }
    }
    if (!open.empty() && Coin(rng, 0.6)) {
      Group& g = groups[open[Uniform(rng, 0, static_cast<int>(open.size()) - 1)]];
      g.images.insert(e->image_index);
      g.members.push_back(e->id);
    } else {
      groups.push_back({e->concept_id ? e->concept_id->value : "",
                        {e->image_index},
                        {e->id}});
    }
  }
  std::vector<std::vector<std::string>> classes;
  for (const Group& g : groups) classes.push_back(g.members);

  std::vector<bool> mask(pool.size(), false);
  AddClassPairs(classes, pool, mask);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Hypothesis& h = pool.at(i);
    if (h.kind == HypothesisKind::kCausalSequence) {
      mask[i] = EffectiveScore(pool, i, mask) > 0.0;
    } else if (h.kind == HypothesisKind::kAffective) {
      mask[i] = pool.own_score(i) > 0.0 && Coin(rng, 0.5);
    }
  }
  return pool.IdsOf(mask);
}

std::vector<std::string> RandomClosedSubset(std::mt19937_64& rng,
                                            const std::vector<std::string>& set,
                                            const HypothesisPool& pool,
                                            const SceneGraphSequence& sequence) {
  const std::vector<bool> outer = *pool.MaskOf(set);
  std::vector<Hypothesis> accepted;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (outer[i]) accepted.push_back(pool.at(i));
  }
  std::vector<std::vector<std::string>> split;
  for (const std::vector<std::string>& c : IdentityClasses(sequence, accepted)) {
    std::vector<std::string> halves[2];
    for (const std::string& id : c) halves[Uniform(rng, 0, 1)].push_back(id);
    split.push_back(std::move(halves[0]));
    split.push_back(std::move(halves[1]));
  }
  std::vector<bool> mask(pool.size(), false);
  AddClassPairs(split, pool, mask);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!outer[i]) continue;
    const Hypothesis& h = pool.at(i);
    if (h.kind == HypothesisKind::kCausalSequence) {
      mask[i] = Coin(rng, 0.7) && EffectiveScore(pool, i, mask) > 0.0;
    } else if (h.kind == HypothesisKind::kAffective) {
      mask[i] = Coin(rng, 0.7);
    }
  }
  return pool.IdsOf(mask);
}

}  // namespace sensemaking::testing
