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

// Candidate hypothesis generation. Every generator over-generates: it emits
// each candidate that has any evidence at all and leaves selection to the
// evaluator. Outputs are sorted by (subject, object, id).

#ifndef SENSEMAKING_HYPGEN_H_
#define SENSEMAKING_HYPGEN_H_

#include <vector>

#include "sensemaking/core_model.h"
#include "sensemaking/kb_query.h"
#include "sensemaking/knowledge_base.h"

namespace sensemaking {

inline constexpr double kDefaultExactMatchValue = 3.0;

struct GenerationOptions {
  int max_path_len = kDefaultMaxPathLength;
  // Evidence value when the very same existent takes part in both events.
  double exact_match_r = kDefaultExactMatchValue;
};

// One "is" candidate per pair of same-concept existents in different images.
// Evidence: knowledge 1 for the shared concept plus one observational item per
// shared normalized attribute, scored by the smaller annotator count.
std::vector<Hypothesis> GenerateReferential(const SceneGraphSequence& sequence);

// One "sequence" candidate per event pair (earlier image -> later image) that
// has a causal KB path between the event concepts, a referential candidate
// joining a participant of each, or a shared participant node.
std::vector<Hypothesis> GenerateCausal(const SceneGraphSequence& sequence,
                                       const KnowledgeBase& kb,
                                       const std::vector<Hypothesis>& referential,
                                       const GenerationOptions& options = {});

// For each character taking part in a linked event, one candidate per
// affective edge leaving the event concept.
std::vector<Hypothesis> GenerateAffective(const SceneGraphSequence& sequence,
                                          const KnowledgeBase& kb);

// Referential, then causal, then affective.
std::vector<Hypothesis> GenerateAll(const SceneGraphSequence& sequence,
                                    const KnowledgeBase& kb,
                                    const GenerationOptions& options = {});

}  // namespace sensemaking

#endif  // SENSEMAKING_HYPGEN_H_
