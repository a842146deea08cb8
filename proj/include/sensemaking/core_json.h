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

// nlohmann::json conversions for the core types. `from_json` throws
// nlohmann::json::exception on malformed input; callers at I/O boundaries
// translate that into a Status.
//
// A SceneGraphSequence serializes to the canonical scene-graph document:
//   {"images":[{"index":0,"existents":[...],"events":[...]}]}

#ifndef SENSEMAKING_CORE_JSON_H_
#define SENSEMAKING_CORE_JSON_H_

#include "json.hpp"
#include "sensemaking/core_model.h"

namespace sensemaking {

void to_json(nlohmann::json& j, const ConceptId& id);
void from_json(const nlohmann::json& j, ConceptId& id);

void to_json(nlohmann::json& j, const Attribute& a);
void from_json(const nlohmann::json& j, Attribute& a);

void to_json(nlohmann::json& j, const KBEdge& e);
void from_json(const nlohmann::json& j, KBEdge& e);

void to_json(nlohmann::json& j, const PathStep& s);
void from_json(const nlohmann::json& j, PathStep& s);

void to_json(nlohmann::json& j, const Evidence& e);
void from_json(const nlohmann::json& j, Evidence& e);

void to_json(nlohmann::json& j, const Hypothesis& h);
void from_json(const nlohmann::json& j, Hypothesis& h);

void to_json(nlohmann::json& j, const Objectives& o);
void from_json(const nlohmann::json& j, Objectives& o);

void to_json(nlohmann::json& j, const SolutionSet& s);
void from_json(const nlohmann::json& j, SolutionSet& s);

void to_json(nlohmann::json& j, const SceneGraphSequence& s);
void from_json(const nlohmann::json& j, SceneGraphSequence& s);

}  // namespace sensemaking

#endif  // SENSEMAKING_CORE_JSON_H_
