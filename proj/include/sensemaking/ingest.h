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

// Input adapters: scene graphs (canonical JSON, Visual Genome), knowledge
// bases (canonical TSV, ConceptNet assertion dump), category configuration,
// and concept linking.

#ifndef SENSEMAKING_INGEST_H_
#define SENSEMAKING_INGEST_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sensemaking/core_model.h"
#include "sensemaking/knowledge_base.h"

namespace sensemaking {

enum class SceneGraphFormat { kCanonical, kVisualGenome };
enum class KnowledgeBaseFormat { kCanonicalTsv, kConceptNetDump };

// Parses and validates a scene-graph document. Syntax errors report
// line:column; a document that parses but breaks an invariant fails with the
// list of violations.
//
// Visual Genome input is a JSON array of image records (or {"images": [...]})
// with "objects", "relationships" and optionally "attributes" lists. Each
// object becomes an existent whose attribute annotator count is the number of
// annotation entries naming that attribute; each relationship becomes an
// event.
absl::StatusOr<SceneGraphSequence> ParseSceneGraphs(absl::string_view input,
                                                    SceneGraphFormat format);

// Canonical JSON, two-space indented, trailing newline.
std::string SerializeSceneGraphs(const SceneGraphSequence& sequence);

// Reads {"relations":{...},"character_concepts":[...],
// "ignore_unknown_relations":bool,"language":"en"}. Relations overlay
// CategoryConfig::Default(); character_concepts replaces the default list.
absl::StatusOr<CategoryConfig> ParseCategoryConfig(absl::string_view json_text);

// Canonical TSV is `start<TAB>relation<TAB>end<TAB>weight` with `#` comments;
// a relation written `Rel-inverse` is stored as `end Rel start`.
// The ConceptNet dump is the tab-separated assertion layout
// ([assertion URI,] relation URI, start URI, end URI, JSON metadata), filtered
// to `config.language`.
absl::StatusOr<KnowledgeBase> LoadKnowledgeBase(absl::string_view input,
                                                KnowledgeBaseFormat format,
                                                const CategoryConfig& config);

// Concept label for a surface string: NormalizeConceptLabel, then a trailing
// plural 's' is dropped when only the singular is known to the KB.
std::optional<ConceptId> LinkLabel(absl::string_view label,
                                   const KnowledgeBase& kb);

// Sets the concept of every existent (by label) and event (by predicate) that
// links; clears it on the rest. Idempotent.
SceneGraphSequence LinkConcepts(SceneGraphSequence sequence,
                                const KnowledgeBase& kb);

absl::StatusOr<std::string> ReadFileToString(const std::string& path);

}  // namespace sensemaking

#endif  // SENSEMAKING_INGEST_H_
