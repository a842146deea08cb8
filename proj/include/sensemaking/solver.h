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

// Search for the best feasible hypothesis set.
//
// Both strategies work on identity-class assignments rather than raw subsets:
// a state assigns every existent to a class, and the accepted referential
// hypotheses are exactly the pairs inside each class, so transitivity holds by
// construction. Causal hypotheses are never a free choice: adding one with a
// positive effective score only adds an edge between existing nodes and
// evidence, so it improves every objective, and one with zero score is
// infeasible. Each state therefore accepts exactly the causal hypotheses whose
// premises make them positive. Affective hypotheses add a concept node and are
// toggled freely.

#ifndef SENSEMAKING_SOLVER_H_
#define SENSEMAKING_SOLVER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sensemaking/core_model.h"
#include "sensemaking/hypeval.h"

namespace sensemaking {

enum class SolverStrategy { kExhaustive, kLocalSearch };

inline constexpr int kMaxExhaustiveChoices = 20;
inline constexpr int kMaxOracleHypotheses = 20;

struct SolverOptions {
  SolverStrategy strategy = SolverStrategy::kLocalSearch;
  ObjectiveWeights weights;
  std::uint64_t seed = 20190701;
  int restarts = 5;
  // Threads for exhaustive enumeration. Results do not depend on it.
  int workers = 1;
  // Also report the non-dominated objective vectors seen during search.
  bool collect_pareto = false;
};

struct SolveResult {
  SolutionSet best;
  // Sorted by Better(); one entry per distinct objective vector.
  std::vector<SolutionSet> pareto_front;
};

// Number of hypotheses exhaustive search enumerates over: referential ones
// plus affective ones with positive evidence.
int CountFreeChoices(const HypothesisPool& pool);

// FailedPrecondition if exhaustive search is asked for more than
// kMaxExhaustiveChoices free choices; InvalidArgument for bad weights.
absl::StatusOr<SolveResult> Solve(const HypothesisPool& pool,
                                  const SceneGraphSequence& sequence,
                                  const SolverOptions& options);

// Hill climbing from `start` (which must be feasible and transitively closed)
// with the local-search move set, scanning moves in pool order.
absl::StatusOr<SolutionSet> HillClimbFrom(const HypothesisPool& pool,
                                          const SceneGraphSequence& sequence,
                                          const ObjectiveWeights& weights,
                                          const std::vector<std::string>& start);

// Test oracle: scores all 2^n subsets of the pool, keeps those passing
// CheckFeasible, and returns the Better()-maximum. Requires
// n <= kMaxOracleHypotheses.
absl::StatusOr<SolutionSet> BruteForceOracle(const HypothesisPool& pool,
                                             const SceneGraphSequence& sequence,
                                             const ObjectiveWeights& weights);

}  // namespace sensemaking

#endif  // SENSEMAKING_SOLVER_H_
