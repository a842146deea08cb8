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

#include "sensemaking/core_model.h"

#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace sensemaking {

namespace {

std::string CollapseWhitespace(absl::string_view text, char separator) {
  std::string out;
  out.reserve(text.size());
  bool pending = false;
  for (const char c : text) {
    if (absl::ascii_isspace(static_cast<unsigned char>(c))) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(separator);
    pending = false;
    out.push_back(absl::ascii_tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

const ExistentNode* SceneGraphSequence::FindExistent(absl::string_view id) const {
  for (const ExistentNode& e : existents) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const EventEdge* SceneGraphSequence::FindEvent(absl::string_view id) const {
  for (const EventEdge& e : events) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

absl::string_view CategoryName(CoherenceCategory category) {
  switch (category) {
    case CoherenceCategory::kReferential:
      return "referential";
    case CoherenceCategory::kCausal:
      return "causal";
    case CoherenceCategory::kAffective:
      return "affective";
    case CoherenceCategory::kSpatial:
      return "spatial";
    case CoherenceCategory::kTemporal:
      return "temporal";
    case CoherenceCategory::kIgnored:
      return "ignored";
  }
  return "ignored";
}

std::optional<CoherenceCategory> ParseCategory(absl::string_view name) {
  const std::string lower = absl::AsciiStrToLower(name);
  for (const CoherenceCategory c :
       {CoherenceCategory::kReferential, CoherenceCategory::kCausal,
        CoherenceCategory::kAffective, CoherenceCategory::kSpatial,
        CoherenceCategory::kTemporal, CoherenceCategory::kIgnored}) {
    if (CategoryName(c) == lower) return c;
  }
  return std::nullopt;
}

absl::string_view EvidenceKindName(EvidenceKind kind) {
  switch (kind) {
    case EvidenceKind::kObservational:
      return "observational";
    case EvidenceKind::kKnowledge:
      return "knowledge";
    case EvidenceKind::kPremise:
      return "premise";
  }
  return "knowledge";
}

absl::string_view HypothesisKindName(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::kReferentialIs:
      return "is";
    case HypothesisKind::kCausalSequence:
      return "sequence";
    case HypothesisKind::kAffective:
      return "affective";
  }
  return "is";
}

std::optional<HypothesisKind> ParseHypothesisKind(absl::string_view name) {
  if (name == "is") return HypothesisKind::kReferentialIs;
  if (name == "sequence") return HypothesisKind::kCausalSequence;
  if (name == "affective") return HypothesisKind::kAffective;
  return std::nullopt;
}

double OwnEvidenceScore(const Hypothesis& hypothesis) {
  double total = 0.0;
  for (const Evidence& e : hypothesis.evidence) {
    if (e.kind != EvidenceKind::kPremise) total += e.score;
  }
  return total;
}

std::string ReferentialId(absl::string_view a, absl::string_view b) {
  if (b < a) std::swap(a, b);
  return absl::StrCat("is:", a, "|", b);
}

std::string CausalId(absl::string_view from_event, absl::string_view to_event) {
  return absl::StrCat("seq:", from_event, "|", to_event);
}

std::string AffectiveId(absl::string_view character, absl::string_view relation,
                        const ConceptId& target) {
  return absl::StrCat("aff:", character, "|", relation, "|", target.value);
}

std::vector<Violation> Validate(const SceneGraphSequence& sequence) {
  std::vector<Violation> out;
  auto report = [&out](Violation::Code code, std::string message) {
    out.push_back({code, std::move(message)});
  };

  const int num_images = static_cast<int>(sequence.images.size());
  for (int i = 0; i < num_images; ++i) {
    if (sequence.images[i].index != i) {
      report(Violation::Code::kNonContiguousImages,
             absl::StrCat("image at position ", i, " has index ",
                          sequence.images[i].index));
    }
  }

  // Existents and events share one id namespace: both become graph nodes.
  std::set<std::string> seen;
  std::unordered_map<std::string, int> existent_image;
  for (const ExistentNode& e : sequence.existents) {
    if (!seen.insert(e.id).second) {
      report(Violation::Code::kDuplicateId,
             absl::StrCat("duplicate id '", e.id, "'"));
    }
    existent_image.emplace(e.id, e.image_index);
    if (e.image_index < 0 || e.image_index >= num_images) {
      report(Violation::Code::kBadImageIndex,
             absl::StrCat("existent '", e.id, "' has image index ",
                          e.image_index, " outside [0, ", num_images, ")"));
    }
    for (const Attribute& a : e.attributes) {
      if (a.annotator_count < 1) {
        report(Violation::Code::kBadAnnotatorCount,
               absl::StrCat("existent '", e.id, "' attribute '", a.name,
                            "' has annotator count ", a.annotator_count));
      }
    }
  }

  for (const EventEdge& ev : sequence.events) {
    if (!seen.insert(ev.id).second) {
      report(Violation::Code::kDuplicateId,
             absl::StrCat("duplicate id '", ev.id, "'"));
    }
    if (ev.image_index < 0 || ev.image_index >= num_images) {
      report(Violation::Code::kBadImageIndex,
             absl::StrCat("event '", ev.id, "' has image index ",
                          ev.image_index, " outside [0, ", num_images, ")"));
    }
    auto check_participant = [&](const std::string& participant,
                                 absl::string_view role) {
      const auto it = existent_image.find(participant);
      if (it == existent_image.end()) {
        report(Violation::Code::kMissingParticipant,
               absl::StrCat("event '", ev.id, "' ", role, " '", participant,
                            "' is not an existent"));
      } else if (it->second != ev.image_index) {
        report(Violation::Code::kParticipantInOtherImage,
               absl::StrCat("event '", ev.id, "' in image ", ev.image_index,
                            " has ", role, " '", participant, "' in image ",
                            it->second));
      }
    };
    check_participant(ev.subject_id, "subject");
    if (ev.object_id.has_value()) check_participant(*ev.object_id, "object");
  }
  return out;
}

std::string NormalizeAttributeName(absl::string_view name) {
  return CollapseWhitespace(name, ' ');
}

std::string NormalizeConceptLabel(absl::string_view label) {
  return CollapseWhitespace(label, '_');
}

}  // namespace sensemaking
