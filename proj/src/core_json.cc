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

#include "sensemaking/core_json.h"

#include <map>
#include <string>
#include <type_traits>
#include <variant>

namespace sensemaking {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw json::other_error::create(501, what, nullptr);
}

EvidenceKind ParseEvidenceKind(const std::string& name) {
  for (const EvidenceKind k :
       {EvidenceKind::kObservational, EvidenceKind::kKnowledge,
        EvidenceKind::kPremise}) {
    if (EvidenceKindName(k) == name) return k;
  }
  Fail("unknown evidence kind '" + name + "'");
}

}  // namespace

void to_json(json& j, const ConceptId& id) { j = id.value; }
void from_json(const json& j, ConceptId& id) { id.value = j.get<std::string>(); }

void to_json(json& j, const Attribute& a) {
  j = json{{"name", a.name}, {"annotators", a.annotator_count}};
}
void from_json(const json& j, Attribute& a) {
  a.name = j.at("name").get<std::string>();
  a.annotator_count = j.value("annotators", 1);
}

void to_json(json& j, const KBEdge& e) {
  j = json{{"start", e.start},
           {"relation", e.relation},
           {"end", e.end},
           {"weight", e.weight}};
}
void from_json(const json& j, KBEdge& e) {
  e.start = j.at("start").get<ConceptId>();
  e.relation = j.at("relation").get<std::string>();
  e.end = j.at("end").get<ConceptId>();
  e.weight = j.at("weight").get<double>();
}

void to_json(json& j, const PathStep& s) {
  j = s.edge;
  j["inverse"] = s.inverse;
}
void from_json(const json& j, PathStep& s) {
  s.edge = j.get<KBEdge>();
  s.inverse = j.value("inverse", false);
}

void to_json(json& j, const Evidence& e) {
  j = json{{"kind", EvidenceKindName(e.kind)}, {"score", e.score}};
  std::visit(
      [&j](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AttributeMatch>) {
          j["attribute"] = json{{"name", p.attribute},
                                {"subject_annotators", p.subject_count},
                                {"object_annotators", p.object_count}};
        } else if constexpr (std::is_same_v<T, SharedExistent>) {
          j["shared_existent"] = p.existent_id;
        } else if constexpr (std::is_same_v<T, KnowledgePath>) {
          j["path"] = json{{"anchor", p.anchor}, {"steps", p.steps}};
        } else {
          j["premise"] = p.hypothesis_id;
        }
      },
      e.provenance);
}
void from_json(const json& j, Evidence& e) {
  e.kind = ParseEvidenceKind(j.at("kind").get<std::string>());
  e.score = j.at("score").get<double>();
  if (j.contains("attribute")) {
    const json& a = j.at("attribute");
    e.provenance = AttributeMatch{a.at("name").get<std::string>(),
                                  a.at("subject_annotators").get<int>(),
                                  a.at("object_annotators").get<int>()};
  } else if (j.contains("shared_existent")) {
    e.provenance = SharedExistent{j.at("shared_existent").get<std::string>()};
  } else if (j.contains("path")) {
    const json& p = j.at("path");
    e.provenance = KnowledgePath{p.at("anchor").get<ConceptId>(),
                                 p.at("steps").get<std::vector<PathStep>>()};
  } else if (j.contains("premise")) {
    e.provenance = PremiseRef{j.at("premise").get<std::string>()};
  } else {
    Fail("evidence without provenance");
  }
}

void to_json(json& j, const Hypothesis& h) {
  j = json{{"id", h.id},
           {"kind", HypothesisKindName(h.kind)},
           {"subject", h.subject},
           {"object", h.object},
           {"evidence", h.evidence}};
  if (!h.relation.empty()) j["relation"] = h.relation;
}
void from_json(const json& j, Hypothesis& h) {
  h.id = j.at("id").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  const auto parsed = ParseHypothesisKind(kind);
  if (!parsed.has_value()) Fail("unknown hypothesis kind '" + kind + "'");
  h.kind = *parsed;
  h.relation = j.value("relation", std::string());
  h.subject = j.at("subject").get<std::string>();
  h.object = j.at("object").get<std::string>();
  h.evidence = j.at("evidence").get<std::vector<Evidence>>();
}

void to_json(json& j, const Objectives& o) {
  j = json{{"connectivity", o.connectivity},
           {"density", o.density},
           {"support", o.support}};
}
void from_json(const json& j, Objectives& o) {
  o.connectivity = j.at("connectivity").get<int>();
  o.density = j.at("density").get<double>();
  o.support = j.at("support").get<double>();
}

void to_json(json& j, const SolutionSet& s) {
  j = json{{"accepted", s.accepted},
           {"objectives", s.objectives},
           {"scalar_score", s.scalar_score}};
}
void from_json(const json& j, SolutionSet& s) {
  s.accepted = j.at("accepted").get<std::vector<std::string>>();
  s.objectives = j.at("objectives").get<Objectives>();
  s.scalar_score = j.at("scalar_score").get<double>();
}

void to_json(json& j, const SceneGraphSequence& s) {
  // Existents and events are grouped under their image, in input order.
  json images = json::array();
  for (const ImageInfo& info : s.images) {
    json image{{"index", info.index},
               {"existents", json::array()},
               {"events", json::array()}};
    if (!info.source.empty()) image["source"] = info.source;
    images.push_back(std::move(image));
  }
  auto slot = [&images](int index) -> json* {
    if (index < 0 || index >= static_cast<int>(images.size())) return nullptr;
    return &images[index];
  };
  for (const ExistentNode& e : s.existents) {
    json node{{"id", e.id}, {"label", e.label}, {"attributes", e.attributes}};
    if (e.concept_id.has_value()) node["concept"] = *e.concept_id;
    json* image = slot(e.image_index);
    if (image == nullptr) Fail("existent '" + e.id + "' has no image");
    (*image)["existents"].push_back(std::move(node));
  }
  for (const EventEdge& ev : s.events) {
    json node{{"id", ev.id},
              {"predicate", ev.predicate},
              {"subject", ev.subject_id}};
    if (ev.object_id.has_value()) node["object"] = *ev.object_id;
    if (ev.concept_id.has_value()) node["concept"] = *ev.concept_id;
    json* image = slot(ev.image_index);
    if (image == nullptr) Fail("event '" + ev.id + "' has no image");
    (*image)["events"].push_back(std::move(node));
  }
  j = json{{"images", std::move(images)}};
}

void from_json(const json& j, SceneGraphSequence& s) {
  s = SceneGraphSequence{};
  for (const json& image : j.at("images")) {
    ImageInfo info;
    info.index = image.at("index").get<int>();
    info.source = image.value("source", std::string());
    s.images.push_back(info);
    if (image.contains("existents")) {
      for (const json& node : image.at("existents")) {
        ExistentNode e;
        e.id = node.at("id").get<std::string>();
        e.image_index = info.index;
        e.label = node.at("label").get<std::string>();
        if (node.contains("attributes")) {
          e.attributes = node.at("attributes").get<std::vector<Attribute>>();
        }
        if (node.contains("concept")) e.concept_id = node.at("concept").get<ConceptId>();
        s.existents.push_back(std::move(e));
      }
    }
    if (image.contains("events")) {
      for (const json& node : image.at("events")) {
        EventEdge ev;
        ev.id = node.at("id").get<std::string>();
        ev.image_index = info.index;
        ev.predicate = node.at("predicate").get<std::string>();
        ev.subject_id = node.at("subject").get<std::string>();
        if (node.contains("object") && !node.at("object").is_null()) {
          ev.object_id = node.at("object").get<std::string>();
        }
        if (node.contains("concept")) ev.concept_id = node.at("concept").get<ConceptId>();
        s.events.push_back(std::move(ev));
      }
    }
  }
}

}  // namespace sensemaking
