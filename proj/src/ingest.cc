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

#include "sensemaking/ingest.h"

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"
#include "sensemaking/core_json.h"

namespace sensemaking {

using nlohmann::json;

namespace {

std::string Position(absl::string_view input, std::size_t byte) {
  int line = 1;
  int column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, input.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (input[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return absl::StrCat("line ", line, ", column ", column);
}

absl::StatusOr<json> ParseJson(absl::string_view input, absl::string_view what) {
  try {
    return json::parse(input.begin(), input.end());
  } catch (const json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, ": parse error at ", Position(input, e.byte), ": ",
                     e.what()));
  }
}

absl::Status CheckValid(const SceneGraphSequence& sequence) {
  const std::vector<Violation> violations = Validate(sequence);
  if (violations.empty()) return absl::OkStatus();
  std::vector<std::string> messages;
  for (const Violation& v : violations) messages.push_back(v.message);
  return absl::InvalidArgumentError(absl::StrCat(
      "scene graphs violate ", violations.size(),
      " invariant(s): ", absl::StrJoin(messages, "; ")));
}

// ---- Visual Genome ----------------------------------------------------------

std::string VgObjectLabel(const json& object) {
  if (object.contains("names") && object.at("names").is_array() &&
      !object.at("names").empty()) {
    return object.at("names").at(0).get<std::string>();
  }
  if (object.contains("name")) return object.at("name").get<std::string>();
  return "object";
}

std::string VgIdText(const json& id) {
  if (id.is_string()) return id.get<std::string>();
  return std::to_string(id.get<std::int64_t>());
}

class VgImageBuilder {
 public:
  VgImageBuilder(int image_index, SceneGraphSequence& out)
      : image_index_(image_index), out_(out) {}

  // Registers an object (first sighting fixes its label) and tallies every
  // attribute entry it carries.
  std::string AddObject(const json& object) {
    const std::string vg_id = VgIdText(object.at("object_id"));
    auto [it, inserted] = objects_.try_emplace(vg_id);
    Pending& p = it->second;
    if (inserted) {
      order_.push_back(vg_id);
      p.id = absl::StrCat(NormalizeConceptLabel(VgObjectLabel(object)), "-",
                          vg_id);
      p.label = VgObjectLabel(object);
    }
    if (object.contains("attributes") && object.at("attributes").is_array()) {
      for (const json& a : object.at("attributes")) {
        const std::string name = NormalizeAttributeName(a.get<std::string>());
        if (name.empty()) continue;
        if (p.counts.try_emplace(name, 0).second) p.attribute_order.push_back(name);
        ++p.counts[name];
      }
    }
    return p.id;
  }

  absl::StatusOr<std::string> Participant(const json& relationship,
                                          absl::string_view role) {
    const std::string inline_key(role);
    const std::string id_key = absl::StrCat(role, "_id");
    if (relationship.contains(inline_key) &&
        relationship.at(inline_key).is_object()) {
      return AddObject(relationship.at(inline_key));
    }
    if (relationship.contains(id_key)) {
      const std::string vg_id = VgIdText(relationship.at(id_key));
      const auto it = objects_.find(vg_id);
      if (it == objects_.end()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "image ", image_index_, ": relationship ", role, " object ", vg_id,
            " is not among the image's objects"));
      }
      return it->second.id;
    }
    return absl::InvalidArgumentError(absl::StrCat(
        "image ", image_index_, ": relationship without ", role));
  }

  void Flush() {
    for (const std::string& vg_id : order_) {
      Pending& p = objects_.at(vg_id);
      ExistentNode e;
      e.id = p.id;
      e.image_index = image_index_;
      e.label = p.label;
      for (const std::string& name : p.attribute_order) {
        e.attributes.push_back({name, std::max(1, p.counts[name])});
      }
      out_.existents.push_back(std::move(e));
    }
  }

 private:
  struct Pending {
    std::string id;
    std::string label;
    std::vector<std::string> attribute_order;
    std::map<std::string, int> counts;
  };

  int image_index_;
  SceneGraphSequence& out_;
  std::vector<std::string> order_;
  std::map<std::string, Pending> objects_;
};

absl::StatusOr<SceneGraphSequence> FromVisualGenome(const json& doc) {
  const json* images = &doc;
  if (doc.is_object() && doc.contains("images")) images = &doc.at("images");
  if (!images->is_array()) {
    return absl::InvalidArgumentError(
        "visual genome input must be an array of image records");
  }
  SceneGraphSequence sequence;
  int index = 0;
  for (const json& record : *images) {
    ImageInfo info{index, ""};
    if (record.contains("image_id")) info.source = VgIdText(record.at("image_id"));
    sequence.images.push_back(info);
    VgImageBuilder builder(index, sequence);
    if (record.contains("objects")) {
      for (const json& object : record.at("objects")) builder.AddObject(object);
    }
    // attributes.json records repeat the object with its attribute list.
    if (record.contains("attributes")) {
      for (const json& object : record.at("attributes")) builder.AddObject(object);
    }
    std::vector<EventEdge> events;
    if (record.contains("relationships")) {
      int ordinal = 0;
      for (const json& rel : record.at("relationships")) {
        EventEdge ev;
        ev.image_index = index;
        ev.id = rel.contains("relationship_id")
                    ? absl::StrCat("rel-", VgIdText(rel.at("relationship_id")))
                    : absl::StrCat("rel-", index, "-", ordinal);
        ev.predicate = rel.at("predicate").get<std::string>();
        absl::StatusOr<std::string> subject = builder.Participant(rel, "subject");
        if (!subject.ok()) return subject.status();
        ev.subject_id = *std::move(subject);
        if (rel.contains("object") || rel.contains("object_id")) {
          absl::StatusOr<std::string> object = builder.Participant(rel, "object");
          if (!object.ok()) return object.status();
          ev.object_id = *std::move(object);
        }
        events.push_back(std::move(ev));
        ++ordinal;
      }
    }
    builder.Flush();
    for (EventEdge& ev : events) sequence.events.push_back(std::move(ev));
    ++index;
  }
  return sequence;
}

// ---- Knowledge base --------------------------------------------------------

constexpr absl::string_view kInverseSuffix = "-inverse";

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

absl::Status CheckRelation(int line, absl::string_view relation,
                           const CategoryConfig& config) {
  if (config.Lookup(relation).has_value() || config.ignore_unknown_relations) {
    return absl::OkStatus();
  }
  return LineError(line, absl::StrCat("unknown relation '", relation, "'"));
}

absl::StatusOr<std::vector<KBEdge>> ParseTsv(absl::string_view input,
                                             const CategoryConfig& config) {
  std::vector<KBEdge> edges;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(input, '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    const absl::string_view trimmed = absl::StripAsciiWhitespace(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::vector<absl::string_view> fields = absl::StrSplit(line, '\t');
    if (fields.size() != 4) {
      return LineError(line_number,
                       absl::StrCat("expected 4 tab-separated fields, found ",
                                    fields.size()));
    }
    KBEdge edge;
    edge.start = ConceptId{NormalizeConceptLabel(fields[0])};
    edge.relation = std::string(absl::StripAsciiWhitespace(fields[1]));
    edge.end = ConceptId{NormalizeConceptLabel(fields[2])};
    if (edge.start.value.empty() || edge.end.value.empty() ||
        edge.relation.empty()) {
      return LineError(line_number, "empty start, relation, or end");
    }
    if (!absl::SimpleAtod(absl::StripAsciiWhitespace(fields[3]), &edge.weight) ||
        !(edge.weight >= 0.0)) {
      return LineError(line_number,
                       absl::StrCat("invalid weight '", fields[3], "'"));
    }
    // "Rel-inverse" states the edge from the other end.
    if (absl::string_view base = edge.relation;
        absl::ConsumeSuffix(&base, kInverseSuffix) && !base.empty()) {
      edge.relation = std::string(base);
      std::swap(edge.start, edge.end);
    }
    if (absl::Status s = CheckRelation(line_number, edge.relation, config);
        !s.ok()) {
      return s;
    }
    edges.push_back(std::move(edge));
  }
  return edges;
}

// "/c/en/play_frisbee/v/wn/..." -> ("en", "play_frisbee").
std::optional<std::pair<std::string, std::string>> SplitConceptUri(
    absl::string_view uri) {
  if (!absl::ConsumePrefix(&uri, "/c/")) return std::nullopt;
  const std::vector<absl::string_view> parts = absl::StrSplit(uri, '/');
  if (parts.size() < 2 || parts[0].empty() || parts[1].empty()) {
    return std::nullopt;
  }
  return std::make_pair(std::string(parts[0]), NormalizeConceptLabel(parts[1]));
}

absl::StatusOr<std::vector<KBEdge>> ParseConceptNet(
    absl::string_view input, const CategoryConfig& config) {
  std::vector<KBEdge> edges;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(input, '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    std::vector<absl::string_view> fields = absl::StrSplit(line, '\t');
    if (fields.size() == 5) fields.erase(fields.begin());
    if (fields.size() != 4) {
      return LineError(line_number,
                       absl::StrCat("expected 4 or 5 tab-separated fields, "
                                    "found ",
                                    fields.size()));
    }
    absl::string_view relation_uri = fields[0];
    if (!absl::ConsumePrefix(&relation_uri, "/r/") || relation_uri.empty()) {
      return LineError(line_number,
                       absl::StrCat("bad relation URI '", fields[0], "'"));
    }
    const auto start = SplitConceptUri(fields[1]);
    const auto end = SplitConceptUri(fields[2]);
    if (!start.has_value() || !end.has_value()) {
      return LineError(line_number, "bad concept URI");
    }
    if (start->first != config.language || end->first != config.language) {
      continue;
    }
    const json meta = json::parse(fields[3].begin(), fields[3].end(), nullptr,
                                  /*allow_exceptions=*/false);
    if (meta.is_discarded() || !meta.is_object()) {
      return LineError(line_number, "metadata is not a JSON object");
    }
    KBEdge edge;
    edge.start = ConceptId{start->second};
    edge.relation = std::string(absl::StripSuffix(relation_uri, "/"));
    edge.end = ConceptId{end->second};
    edge.weight = 1.0;
    if (meta.contains("weight")) {
      if (!meta.at("weight").is_number()) {
        return LineError(line_number, "weight is not a number");
      }
      edge.weight = meta.at("weight").get<double>();
    }
    if (!(edge.weight >= 0.0)) {
      return LineError(line_number, "negative weight");
    }
    // "Rel-inverse" states the edge from the other end.
    if (absl::string_view base = edge.relation;
        absl::ConsumeSuffix(&base, kInverseSuffix) && !base.empty()) {
      edge.relation = std::string(base);
      std::swap(edge.start, edge.end);
    }
    if (absl::Status s = CheckRelation(line_number, edge.relation, config);
        !s.ok()) {
      return s;
    }
    edges.push_back(std::move(edge));
  }
  return edges;
}

}  // namespace

absl::StatusOr<SceneGraphSequence> ParseSceneGraphs(absl::string_view input,
                                                    SceneGraphFormat format) {
  absl::StatusOr<json> doc = ParseJson(input, "scene graphs");
  if (!doc.ok()) return doc.status();
  SceneGraphSequence sequence;
  try {
    if (format == SceneGraphFormat::kCanonical) {
      sequence = doc->get<SceneGraphSequence>();
    } else {
      absl::StatusOr<SceneGraphSequence> vg = FromVisualGenome(*doc);
      if (!vg.ok()) return vg.status();
      sequence = *std::move(vg);
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("scene graphs: malformed document: ", e.what()));
  }
  if (absl::Status s = CheckValid(sequence); !s.ok()) return s;
  return sequence;
}

std::string SerializeSceneGraphs(const SceneGraphSequence& sequence) {
  return json(sequence).dump(2) + "\n";
}

absl::StatusOr<CategoryConfig> ParseCategoryConfig(absl::string_view json_text) {
  // nlohmann keeps the last of duplicate keys; a relation listed twice is
  // rejected instead.
  std::vector<std::string> stack;
  std::string last_key;
  std::set<std::string> seen;
  std::string duplicate;
  const json::parser_callback_t watch = [&](int, json::parse_event_t event,
                                            json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
      case json::parse_event_t::array_start:
        stack.push_back(last_key);
        last_key.clear();
        break;
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        if (!stack.empty()) stack.pop_back();
        break;
      case json::parse_event_t::key:
        last_key = parsed.get<std::string>();
        if (stack.size() == 2 && stack[1] == "relations" &&
            !seen.insert(last_key).second) {
          duplicate = last_key;
        }
        break;
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end(), watch);
  } catch (const json::parse_error& e) {
    return absl::InvalidArgumentError(absl::StrCat(
        "category config: parse error at ", Position(json_text, e.byte), ": ",
        e.what()));
  }
  if (!duplicate.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "category config: relation '", duplicate, "' is mapped twice"));
  }
  if (!doc.is_object()) {
    return absl::InvalidArgumentError("category config must be a JSON object");
  }

  CategoryConfig config = CategoryConfig::Default();
  try {
    if (doc.contains("relations")) {
      for (const auto& [relation, value] : doc.at("relations").items()) {
        const std::string name = value.get<std::string>();
        const std::optional<CoherenceCategory> category = ParseCategory(name);
        if (!category.has_value()) {
          return absl::InvalidArgumentError(
              absl::StrCat("category config: relation '", relation,
                           "' has unknown category '", name, "'"));
        }
        config.relations[relation] = *category;
      }
    }
    if (doc.contains("character_concepts")) {
      config.character_concepts.clear();
      for (const json& c : doc.at("character_concepts")) {
        config.character_concepts.push_back(
            ConceptId{NormalizeConceptLabel(c.get<std::string>())});
      }
    }
    config.ignore_unknown_relations =
        doc.value("ignore_unknown_relations", config.ignore_unknown_relations);
    config.language = doc.value("language", config.language);
    config.taxonomy_relation =
        doc.value("taxonomy_relation", config.taxonomy_relation);
    config.character_max_hops =
        doc.value("character_max_hops", config.character_max_hops);
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("category config: ", e.what()));
  }
  return config;
}

absl::StatusOr<KnowledgeBase> LoadKnowledgeBase(absl::string_view input,
                                                KnowledgeBaseFormat format,
                                                const CategoryConfig& config) {
  absl::StatusOr<std::vector<KBEdge>> edges =
      format == KnowledgeBaseFormat::kCanonicalTsv ? ParseTsv(input, config)
                                                   : ParseConceptNet(input, config);
  if (!edges.ok()) return edges.status();
  return KnowledgeBase::Build(*std::move(edges), config);
}

std::optional<ConceptId> LinkLabel(absl::string_view label,
                                   const KnowledgeBase& kb) {
  const std::string normalized = NormalizeConceptLabel(label);
  if (normalized.empty()) return std::nullopt;
  if (std::optional<ConceptId> c = kb.FindConcept(normalized)) return c;
  if (normalized.size() > 1 && normalized.back() == 's') {
    return kb.FindConcept(
        absl::string_view(normalized).substr(0, normalized.size() - 1));
  }
  return std::nullopt;
}

SceneGraphSequence LinkConcepts(SceneGraphSequence sequence,
                                const KnowledgeBase& kb) {
  for (ExistentNode& e : sequence.existents) e.concept_id = LinkLabel(e.label, kb);
  for (EventEdge& ev : sequence.events) {
    ev.concept_id = LinkLabel(ev.predicate, kb);
  }
  return sequence;
}

absl::StatusOr<std::string> ReadFileToString(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return absl::DataLossError(absl::StrCat("error reading '", path, "'"));
  return buffer.str();
}

}  // namespace sensemaking
