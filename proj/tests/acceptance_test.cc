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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "sensemaking/export.h"
#include "sensemaking/hypeval.h"
#include "sensemaking/hypgen.h"
#include "sensemaking/solver.h"
#include "test_util.h"

namespace sensemaking {
namespace {

using Constraint = FeasibilityViolation::Constraint;

// Criterion bodies return an empty string on success, else a reason.
using Check = std::function<std::string()>;

template <typename T>
std::string StatusReason(const absl::StatusOr<T>& s) {
  return s.ok() ? "" : std::string(s.status().ToString());
}

bool Has(const std::vector<FeasibilityViolation>& v, Constraint c) {
  return std::any_of(v.begin(), v.end(),
                     [c](const FeasibilityViolation& x) { return x.constraint == c; });
}

std::string FrisbeeReferential() {
  absl::StatusOr<testing::Scenario> s = testing::FrisbeeScenario();
  if (!s.ok()) return StatusReason(s);
  const HypothesisPool pool(GenerateReferential(s->sequence));
  int grass = 0;
  for (const Hypothesis& h : pool.hypotheses()) {
    if (h.subject.rfind("grass-", 0) != 0) continue;
    ++grass;
    const double total = OwnEvidenceScore(h);
    if (total != 2.0) return absl::StrCat(h.id, " scores ", total);
  }
  return grass == 3 ? "" : absl::StrCat(grass, " grass hypotheses, want 3");
}

std::string FrisbeeCausal() {
  absl::StatusOr<testing::Scenario> s = testing::FrisbeeScenario();
  if (!s.ok()) return StatusReason(s);
  const HypothesisPool pool(GenerateAll(s->sequence, s->kb));
  const std::string premise = "is:frisbee-2|frisbee-3";
  const std::optional<std::size_t> seq = pool.IndexOf("seq:ev-2|ev-4");
  const std::optional<std::size_t> pre = pool.IndexOf(premise);
  if (!seq || !pre) return "throwing->catching or its premise missing";
  if (pool.own_score(*pre) != 1.0) return "premise score is not 1";
  const std::vector<std::size_t>& premises = pool.premises(*seq);
  if (std::find(premises.begin(), premises.end(), *pre) == premises.end()) {
    return "frisbee premise not attached";
  }
  std::vector<bool> mask(pool.size(), false);
  mask[*seq] = true;
  const double alone = EffectiveScore(pool, *seq, mask);
  mask[*pre] = true;
  const double with = EffectiveScore(pool, *seq, mask);
  if (std::abs(alone - 1.915) > 1e-9) return absl::StrCat("alone ", alone);
  if (std::abs(with - 2.915) > 1e-9) return absl::StrCat("with premise ", with);
  return "";
}

std::string FrisbeeAffective() {
  absl::StatusOr<testing::Scenario> s = testing::FrisbeeScenario();
  if (!s.ok()) return StatusReason(s);
  std::set<std::string> woman;
  for (const Hypothesis& h : GenerateAll(s->sequence, s->kb)) {
    if (h.kind != HypothesisKind::kAffective) continue;
    if (h.subject.rfind("woman", 0) == 0) woman.insert(h.id);
  }
  const std::set<std::string> want = {"aff:woman-2|CausesDesire|wash_hands",
                                      "aff:woman-2|MotivatedByGoal|playing_pretend"};
  return woman == want ? "" : absl::StrCat(woman.size(), " affective hypotheses");
}

std::string HorseResolution() {
  absl::StatusOr<testing::Scenario> s = testing::HorseScenario();
  if (!s.ok()) return StatusReason(s);
  const HypothesisPool pool(GenerateAll(s->sequence, s->kb));
  const std::vector<std::string> set_b = {
      "is:horse-1|horse-4", "is:horse-1|horse-5", "is:horse-2|horse-3",
      "is:horse-4|horse-5", "is:man-2|man-3",     "seq:riding-1|riding-3",
      "seq:riding-2|riding-3"};
  const std::vector<std::string> set_c = {
      "is:horse-1|horse-3", "is:horse-1|horse-5", "is:horse-2|horse-4",
      "is:horse-3|horse-5", "is:man-2|man-3",     "seq:riding-1|riding-3",
      "seq:riding-2|riding-3"};
  const Evaluator evaluator(s->sequence, pool, ObjectiveWeights{});
  const SolutionSet b = evaluator.Evaluate(*pool.MaskOf(set_b));
  const SolutionSet c = evaluator.Evaluate(*pool.MaskOf(set_c));
  if (b.objectives.support != 12.0 || c.objectives.support != 13.0) {
    return absl::StrCat("supports ", b.objectives.support, " and ", c.objectives.support);
  }
  if (b.objectives.connectivity != c.objectives.connectivity ||
      b.objectives.density != c.objectives.density) {
    return "connectivity or density differ between the candidate sets";
  }
  for (const SolverStrategy strategy :
       {SolverStrategy::kExhaustive, SolverStrategy::kLocalSearch}) {
    SolverOptions options;
    options.strategy = strategy;
    absl::StatusOr<SolveResult> r = Solve(pool, s->sequence, options);
    if (!r.ok()) return StatusReason(r);
    if (r->best.accepted != set_c) return "solver did not return the 13-support set";
  }
  return "";
}

std::string OracleEquivalence() {
  std::mt19937_64 rng(5001);
  for (int i = 0; i < 200; ++i) {
    const testing::RandomInstance inst = testing::MakeRandomInstance(rng);
    const SceneGraphSequence& seq = inst.scenario.sequence;
    const HypothesisPool pool(inst.hypotheses);
    absl::StatusOr<SolutionSet> oracle = BruteForceOracle(pool, seq, ObjectiveWeights{});
    if (!oracle.ok()) return StatusReason(oracle);
    SolverOptions options;
    options.strategy = SolverStrategy::kExhaustive;
    absl::StatusOr<SolveResult> exhaustive = Solve(pool, seq, options);
    if (!exhaustive.ok()) return StatusReason(exhaustive);
    if (!(exhaustive->best == *oracle)) return absl::StrCat("instance ", i, ": exhaustive != oracle");
    options.strategy = SolverStrategy::kLocalSearch;
    absl::StatusOr<SolveResult> local = Solve(pool, seq, options);
    if (!local.ok()) return StatusReason(local);
    if (local->best.scalar_score < 0.9 * oracle->scalar_score - 1e-12) {
      return absl::StrCat("instance ", i, ": local search below 0.9x oracle");
    }
  }
  return "";
}

// Injects a c1 and a c2 violation into `accepted` when the pool allows it.
// Returns the number of injections tried, or -1 if one went undetected.
int InjectAndCheck(const std::vector<std::string>& accepted,
                   const HypothesisPool& pool, const SceneGraphSequence& seq) {
  const std::vector<ExistentNode>& ex = seq.existents;
  int tried = 0;
  bool c1_done = false, c2_done = false;
  for (std::size_t x = 0; x < ex.size() && !(c1_done && c2_done); ++x) {
    for (std::size_t y = 0; y < ex.size(); ++y) {
      for (std::size_t z = 0; z < ex.size(); ++z) {
        if (x == y || y == z || x == z) continue;
        const auto xz = pool.FindReferential(ex[x].id, ex[z].id);
        const auto yz = pool.FindReferential(ex[y].id, ex[z].id);
        if (!xz || !yz) continue;
        std::set<std::string> ids(accepted.begin(), accepted.end());
        ids.insert(pool.at(*xz).id);
        ids.insert(pool.at(*yz).id);
        const auto xy = pool.FindReferential(ex[x].id, ex[y].id);
        Constraint want;
        if (!c1_done && ex[x].image_index == ex[y].image_index) {
          want = Constraint::kNonRedundancy;
          c1_done = true;
        } else if (!c2_done && xy) {
          ids.erase(pool.at(*xy).id);
          want = Constraint::kTransitivity;
          c2_done = true;
        } else {
          continue;
        }
        ++tried;
        absl::StatusOr<std::vector<FeasibilityViolation>> v = CheckFeasible(
            std::vector<std::string>(ids.begin(), ids.end()), pool, seq);
        if (!v.ok() || !Has(*v, want)) return -1;
      }
    }
  }
  return tried;
}

std::string Feasibility() {
  std::mt19937_64 rng(6001);
  testing::RandomInstanceOptions opts;
  opts.with_events = false;
  opts.max_existents = 9;
  int c_tried = 0;
  for (int i = 0; i < 500; ++i) {
    const testing::RandomInstance inst = testing::MakeRandomInstance(rng, opts);
    const SceneGraphSequence& seq = inst.scenario.sequence;
    const HypothesisPool pool(inst.hypotheses);
    for (const SolverStrategy strategy :
         {SolverStrategy::kExhaustive, SolverStrategy::kLocalSearch}) {
      SolverOptions options;
      options.strategy = strategy;
      absl::StatusOr<SolveResult> r = Solve(pool, seq, options);
      if (!r.ok()) return StatusReason(r);
      absl::StatusOr<std::vector<FeasibilityViolation>> v =
          CheckFeasible(r->best.accepted, pool, seq);
      if (!v.ok()) return StatusReason(v);
      if (!v->empty()) return absl::StrCat("pool ", i, ": ", (*v)[0].message);
      const int tried = InjectAndCheck(r->best.accepted, pool, seq);
      if (tried < 0) return absl::StrCat("pool ", i, ": injected violation missed");
      c_tried += tried;
    }
  }
  return c_tried > 0 ? "" : "no violation could be injected";
}

std::string Monotonicity() {
  std::mt19937_64 rng(7001);
  for (int i = 0; i < 200; ++i) {
    const testing::RandomInstance inst = testing::MakeRandomInstance(rng);
    const SceneGraphSequence& seq = inst.scenario.sequence;
    const HypothesisPool pool(inst.hypotheses);
    const std::vector<std::string> b = testing::RandomClosedSet(rng, pool, seq);
    const std::vector<std::string> a = testing::RandomClosedSubset(rng, b, pool, seq);
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return "A is not a subset of B";
    for (const auto* set : {&a, &b}) {
      absl::StatusOr<std::vector<FeasibilityViolation>> v = CheckFeasible(*set, pool, seq);
      if (!v.ok() || !v->empty()) return absl::StrCat("pair ", i, ": set not feasible");
    }
    const double sa = *EffectiveSupport(a, pool), sb = *EffectiveSupport(b, pool);
    if (sa > sb) return absl::StrCat("pair ", i, ": ", sa, " > ", sb);
  }
  return "";
}

absl::StatusOr<std::string> Pipeline(const testing::Scenario& s, SolverStrategy strategy,
                                     int workers) {
  const HypothesisPool pool(GenerateAll(s.sequence, s.kb));
  SolverOptions options;
  options.strategy = strategy;
  options.workers = workers;
  absl::StatusOr<SolveResult> r = Solve(pool, s.sequence, options);
  if (!r.ok()) return r.status();
  absl::StatusOr<SensemakingGraph> g = BuildSensemakingGraph(s.sequence, pool, r->best);
  if (!g.ok()) return g.status();
  return absl::StrCat(ExportJson(*g), "\x1f", ExportDot(*g));
}

std::string Determinism() {
  std::vector<testing::Scenario> scenarios;
  for (auto s : {testing::FrisbeeScenario(), testing::HorseScenario()}) {
    if (!s.ok()) return StatusReason(s);
    scenarios.push_back(*std::move(s));
  }
  std::mt19937_64 rng(8001);
  for (int i = 0; i < 20; ++i) scenarios.push_back(testing::MakeRandomInstance(rng).scenario);
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    for (const SolverStrategy strategy :
         {SolverStrategy::kExhaustive, SolverStrategy::kLocalSearch}) {
      absl::StatusOr<std::string> first = Pipeline(scenarios[i], strategy, 1);
      if (!first.ok()) return StatusReason(first);
      for (const int workers : {1, 2, 4, 8}) {
        absl::StatusOr<std::string> again = Pipeline(scenarios[i], strategy, workers);
        if (!again.ok()) return StatusReason(again);
        if (*again != *first) {
          return absl::StrCat("scenario ", i, " differs with ", workers, " workers");
        }
      }
    }
  }
  return "";
}

struct Criterion {
  int number;
  const char* name;
  Check check;
  double budget_seconds;  // 0: no runtime bound
};

int Main() {
  const Criterion criteria[] = {
      {1, "frisbee referential scores", FrisbeeReferential, 1},
      {2, "frisbee causal score", FrisbeeCausal, 1},
      {3, "frisbee affective output", FrisbeeAffective, 0},
      {4, "horse resolution", HorseResolution, 5},
      {5, "oracle equivalence", OracleEquivalence, 60},
      {6, "feasibility properties", Feasibility, 0},
      {7, "support monotonicity", Monotonicity, 0},
      {8, "determinism", Determinism, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason = c.check();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      reason = absl::StrCat("took ", seconds, " s, budget ", c.budget_seconds, " s");
    }
    std::printf("%s %d %s (%.3f s)%s%s\n", reason.empty() ? "PASS" : "FAIL", c.number,
                c.name, seconds, reason.empty() ? "" : ": ", reason.c_str());
    if (!reason.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace sensemaking

int main() { return sensemaking::Main(); }
