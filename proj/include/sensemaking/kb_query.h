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

// Category-filtered, length-capped path queries over a KnowledgeBase.

#ifndef SENSEMAKING_KB_QUERY_H_
#define SENSEMAKING_KB_QUERY_H_

#include <string>
#include <vector>

#include "sensemaking/core_model.h"
#include "sensemaking/knowledge_base.h"

namespace sensemaking {

inline constexpr int kDefaultMaxPathLength = 3;

struct KBPath {
  std::vector<PathStep> steps;
  CoherenceCategory category = CoherenceCategory::kCausal;

  friend bool operator==(const KBPath&, const KBPath&) = default;
};

// All simple paths (no repeated concept) from `src` to `dst` with at most
// `max_len` edges, every edge in `category`, each edge walkable in either
// direction. The 0-length path is included iff src == dst. Sorted by length,
// then lexicographically by steps. Unknown concepts yield no paths.
std::vector<KBPath> FindPaths(const KnowledgeBase& kb, const ConceptId& src,
                              const ConceptId& dst, CoherenceCategory category,
                              int max_len = kDefaultMaxPathLength);

// Mean edge weight; exactly 1 for the 0-length path.
double PathScore(const KBPath& path);

struct AffectiveNeighbor {
  std::string relation;
  ConceptId target;
  double weight = 0.0;

  friend bool operator==(const AffectiveNeighbor&,
                         const AffectiveNeighbor&) = default;
};

// Outgoing affective-category edges of `event_concept`, one hop only.
std::vector<AffectiveNeighbor> AffectiveNeighbors(const KnowledgeBase& kb,
                                                  const ConceptId& event_concept);

}  // namespace sensemaking

#endif  // SENSEMAKING_KB_QUERY_H_
