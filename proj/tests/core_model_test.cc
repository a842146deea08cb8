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

#include <random>

#include "gtest/gtest.h"
#include "json.hpp"
#include "sensemaking/core_json.h"
#include "sensemaking/hypeval.h"
#include "test_util.h"

namespace sensemaking {
namespace {

using nlohmann::json;

SceneGraphSequence ThreeImages() {
  SceneGraphSequence s;
  s.images = {{0, ""}, {1, ""}, {2, ""}};
  s.existents = {{"a", 0, "cat", {{"red", 1}}, std::nullopt},
                 {"b", 1, "cat", {}, std::nullopt},
                 {"c", 2, "ball", {}, std::nullopt}};
  s.events = {{"e1", 0, "sitting", "a", std::nullopt, std::nullopt}};
  return s;
}

TEST(ValidateTest, WellFormedSequenceHasNoViolations) {
  EXPECT_TRUE(Validate(ThreeImages()).empty());
}

TEST(ValidateTest, EmptySequenceIsValid) {
  EXPECT_TRUE(Validate(SceneGraphSequence{}).empty());
}

TEST(ValidateTest, SubjectInAnotherImage) {
  SceneGraphSequence s = ThreeImages();
  s.events[0].subject_id = "b";
  const std::vector<Violation> v = Validate(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, Violation::Code::kParticipantInOtherImage);
}

TEST(ValidateTest, DuplicateExistentId) {
  SceneGraphSequence s = ThreeImages();
  s.existents[1].id = "a";
  const std::vector<Violation> v = Validate(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, Violation::Code::kDuplicateId);
}

TEST(ValidateTest, OtherViolations) {
  SceneGraphSequence s = ThreeImages();
  s.existents[0].attributes[0].annotator_count = 0;
  s.events[0].object_id = "nowhere";
  s.existents[2].image_index = 7;
  std::vector<Violation::Code> codes;
  for (const Violation& v : Validate(s)) codes.push_back(v.code);
  EXPECT_NE(std::find(codes.begin(), codes.end(),
                      Violation::Code::kBadAnnotatorCount),
            codes.end());
  EXPECT_NE(std::find(codes.begin(), codes.end(),
                      Violation::Code::kMissingParticipant),
            codes.end());
  EXPECT_NE(std::find(codes.begin(), codes.end(),
                      Violation::Code::kBadImageIndex),
            codes.end());
}

TEST(NormalizeTest, ConceptLabel) {
  EXPECT_EQ(NormalizeConceptLabel("  Play  Frisbee "), "play_frisbee");
  EXPECT_EQ(NormalizeConceptLabel("Grass "), "grass");
  EXPECT_EQ(NormalizeConceptLabel(NormalizeConceptLabel("Wash Hands")),
            "wash_hands");
}

TEST(NormalizeTest, AttributeName) {
  EXPECT_EQ(NormalizeAttributeName(" Dark   Green"), "dark green");
}

TEST(HypothesisIdTest, ReferentialIdIsSymmetric) {
  EXPECT_EQ(ReferentialId("b", "a"), ReferentialId("a", "b"));
  EXPECT_EQ(ReferentialId("a", "b"), "is:a|b");
  EXPECT_EQ(CausalId("e1", "e2"), "seq:e1|e2");
  EXPECT_EQ(AffectiveId("w", "CausesDesire", ConceptId{"wash_hands"}),
            "aff:w|CausesDesire|wash_hands");
}

TEST(OwnEvidenceScoreTest, SkipsPremises) {
  Hypothesis h;
  h.evidence = {{EvidenceKind::kKnowledge, 1.5, KnowledgePath{}},
                {EvidenceKind::kPremise, 0.0, PremiseRef{"is:a|b"}},
                {EvidenceKind::kObservational, 1.0, AttributeMatch{"red", 1, 2}}};
  EXPECT_DOUBLE_EQ(OwnEvidenceScore(h), 2.5);
}

template <typename T>
T RoundTrip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

TEST(JsonRoundTripTest, CoreTypes) {
  const KBEdge edge{ConceptId{"play_frisbee"}, "HasSubevent",
                    ConceptId{"throwing"}, 1.915};
  EXPECT_EQ(RoundTrip(edge), edge);
  const PathStep step{edge, true};
  EXPECT_EQ(RoundTrip(step), step);

  Hypothesis h;
  h.id = CausalId("e1", "e2");
  h.kind = HypothesisKind::kCausalSequence;
  h.subject = "e1";
  h.object = "e2";
  h.evidence = {
      {EvidenceKind::kKnowledge, 1.915,
       KnowledgePath{ConceptId{"throwing"}, {step, {edge, false}}}},
      {EvidenceKind::kPremise, 0.0, PremiseRef{"is:a|b"}},
      {EvidenceKind::kObservational, 3.0, SharedExistent{"a"}},
      {EvidenceKind::kObservational, 1.0, AttributeMatch{"red", 1, 2}}};
  EXPECT_EQ(RoundTrip(h), h);

  const SolutionSet s{{"is:a|b", "seq:e1|e2"}, {1, 0.25, 3.5}, 1.75};
  EXPECT_EQ(RoundTrip(s), s);
}

TEST(JsonRoundTripTest, RandomSequences) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const testing::RandomInstance inst = testing::MakeRandomInstance(rng);
    const SceneGraphSequence& seq = inst.scenario.sequence;
    EXPECT_EQ(RoundTrip(seq), seq);
    for (const Hypothesis& h : inst.hypotheses) EXPECT_EQ(RoundTrip(h), h);
  }
}

}  // namespace
}  // namespace sensemaking
