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

// Hypothesis-set evaluation: identity classes, feasibility (non-redundancy
// and transitivity of "is"), premise-aware support, and the graph the
// topological objectives are measured on.

#ifndef SENSEMAKING_HYPEVAL_H_
#define SENSEMAKING_HYPEVAL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sensemaking/core_model.h"
#include "sensemaking/graph_metrics.h"

namespace sensemaking {

// Hypotheses addressed by position; ids must be unique.
class HypothesisPool {
 public:
  HypothesisPool() = default;
  explicit HypothesisPool(std::vector<Hypothesis> hypotheses);

  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  const Hypothesis& at(std::size_t index) const { return hypotheses_[index]; }
  std::size_t size() const { return hypotheses_.size(); }
  std::optional<std::size_t> IndexOf(absl::string_view id) const;

  // Referential hypothesis joining two existents (either order).
  std::optional<std::size_t> FindReferential(absl::string_view a,
                                             absl::string_view b) const;

  // Accepted mask for a list of ids; NotFound on an unknown id.
  absl::StatusOr<std::vector<bool>> MaskOf(
      const std::vector<std::string>& ids) const;
  // Sorted ids of a mask.
  std::vector<std::string> IdsOf(const std::vector<bool>& mask) const;

  // Sum of non-premise evidence of pool[index].
  double own_score(std::size_t index) const { return own_scores_[index]; }
  // Pool positions referenced by premise evidence of pool[index]; premises
  // naming ids outside the pool are dropped.
  const std::vector<std::size_t>& premises(std::size_t index) const {
    return premises_[index];
  }

 private:
  std::vector<Hypothesis> hypotheses_;
  std::vector<double> own_scores_;
  std::vector<std::vector<std::size_t>> premises_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::pair<std::string, std::string>, std::size_t> referential_;
};

struct ObjectiveWeights {
  double connectivity = 1.0;
  double density = 1.0;
  double support = 1.0;

  // Non-negative and not all zero.
  absl::Status Validate() const;
};

// Partition of all existents of `sequence` under the transitive closure of the
// accepted "is" hypotheses (other kinds are ignored). Each class is sorted and
// classes are ordered by their first member.
std::vector<std::vector<std::string>> IdentityClasses(
    const SceneGraphSequence& sequence, const std::vector<Hypothesis>& accepted);

struct FeasibilityViolation {
  enum class Constraint {
    kNonRedundancy,  // two existents of one image in one identity class
    kTransitivity,   // a class pair whose direct "is" is not accepted
    kZeroSupport,    // an accepted hypothesis with no effective evidence
  };
  Constraint constraint;
  std::string message;
};

// Effective score of pool[index] under `accepted`: own non-premise evidence
// plus, for each premise whose hypothesis is also accepted, that hypothesis'
// effective score.
double EffectiveScore(const HypothesisPool& pool, std::size_t index,
                      const std::vector<bool>& accepted);

// Returns every violation; an empty list means feasible. NotFound for an id
// that is not in the pool.
absl::StatusOr<std::vector<FeasibilityViolation>> CheckFeasible(
    const std::vector<std::string>& ids, const HypothesisPool& pool,
    const SceneGraphSequence& sequence);

// Sum of effective scores over the accepted ids, in pool order.
absl::StatusOr<double> EffectiveSupport(const std::vector<std::string>& ids,
                                        const HypothesisPool& pool);

struct ObjectiveGraph {
  UndirectedGraph graph;
  // Existent ids, then event ids, then "concept:<label>" for affective targets.
  std::vector<std::string> node_names;
};

inline constexpr absl::string_view kConceptNodePrefix = "concept:";

// Scores candidate sets. Holds the scene-graph skeleton (existents, events,
// participation edges) so each evaluation only adds hypothesis edges.
class Evaluator {
 public:
  Evaluator(const SceneGraphSequence& sequence, const HypothesisPool& pool,
            ObjectiveWeights weights);

  const HypothesisPool& pool() const { return pool_; }
  const SceneGraphSequence& sequence() const { return sequence_; }
  const ObjectiveWeights& weights() const { return weights_; }

  // Effective support with every premise resolved; the support normalizer.
  double total_raw_support() const { return total_raw_support_; }

  double Support(const std::vector<bool>& accepted) const;
  ObjectiveGraph BuildGraph(const std::vector<bool>& accepted) const;

  // Objectives and scalar score; no feasibility check.
  SolutionSet Evaluate(const std::vector<bool>& accepted) const;

 private:
  const SceneGraphSequence& sequence_;
  const HypothesisPool& pool_;
  ObjectiveWeights weights_;
  ObjectiveGraph skeleton_;
  std::map<std::string, int, std::less<>> node_index_;
  std::vector<std::pair<int, int>> hypothesis_endpoints_;  // -1: concept node
  double total_raw_support_ = 0.0;
};

// Objective graph of `ids` over `sequence`.
absl::StatusOr<ObjectiveGraph> BuildObjectiveGraph(
    const SceneGraphSequence& sequence, const HypothesisPool& pool,
    const std::vector<std::string>& ids);

// Total preference order: higher scalar score, then higher support, density,
// connectivity, then the lexicographically smaller accepted id list.
bool Better(const SolutionSet& a, const SolutionSet& b);

// True if `a` is at least as good as `b` on every objective and strictly
// better on one.
bool Dominates(const Objectives& a, const Objectives& b);

}  // namespace sensemaking

#endif  // SENSEMAKING_HYPEVAL_H_
