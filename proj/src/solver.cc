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

#include "sensemaking/solver.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace sensemaking {

namespace {

// Non-dominated objective vectors, one solution each.
class ParetoArchive {
 public:
  void Offer(const SolutionSet& s) {
    for (const SolutionSet& kept : front_) {
      if (Dominates(kept.objectives, s.objectives)) return;
    }
    for (SolutionSet& kept : front_) {
      if (kept.objectives == s.objectives) {
        if (Better(s, kept)) kept = s;
        return;
      }
    }
    std::erase_if(front_, [&s](const SolutionSet& kept) {
      return Dominates(s.objectives, kept.objectives);
    });
    front_.push_back(s);
  }

  void Merge(const ParetoArchive& other) {
    for (const SolutionSet& s : other.front_) Offer(s);
  }

  std::vector<SolutionSet> Sorted() const {
    std::vector<SolutionSet> out = front_;
    std::sort(out.begin(), out.end(), Better);
    return out;
  }

 private:
  std::vector<SolutionSet> front_;
};

struct Incumbent {
  std::optional<SolutionSet> best;
  ParetoArchive archive;
  bool collect_pareto = false;

  void Offer(const SolutionSet& s) {
    if (!best.has_value() || Better(s, *best)) best = s;
    if (collect_pareto) archive.Offer(s);
  }
};

// Existents that appear in some referential hypothesis, with the pool index of
// the hypothesis joining each pair.
class SearchSpace {
 public:
  explicit SearchSpace(const Evaluator& evaluator) : evaluator_(evaluator) {
    const HypothesisPool& pool = evaluator.pool();
    std::map<std::string, int> image_of;
    for (const ExistentNode& e : evaluator.sequence().existents) {
      image_of.emplace(e.id, e.image_index);
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const Hypothesis& h = pool.at(i);
      switch (h.kind) {
        case HypothesisKind::kReferentialIs:
          referential_.push_back(i);
          member_ids_.push_back(h.subject);
          member_ids_.push_back(h.object);
          break;
        case HypothesisKind::kCausalSequence:
          causal_.push_back(i);
          break;
        case HypothesisKind::kAffective:
          if (pool.own_score(i) > 0.0) affective_.push_back(i);
          break;
      }
    }
    std::sort(member_ids_.begin(), member_ids_.end());
    member_ids_.erase(std::unique(member_ids_.begin(), member_ids_.end()),
                      member_ids_.end());
    const int m = num_members();
    image_.resize(m);
    for (int x = 0; x < m; ++x) {
      const auto it = image_of.find(member_ids_[x]);
      image_[x] = it == image_of.end() ? -1 - x : it->second;
    }
    pair_.assign(m, std::vector<int>(m, -1));
    for (const std::size_t i : referential_) {
      const int a = Member(pool.at(i).subject);
      const int b = Member(pool.at(i).object);
      pair_[a][b] = pair_[b][a] = static_cast<int>(i);
      endpoints_.emplace_back(a, b);
    }
  }

  int num_members() const { return static_cast<int>(member_ids_.size()); }
  int Member(const std::string& id) const {
    return static_cast<int>(
        std::lower_bound(member_ids_.begin(), member_ids_.end(), id) -
        member_ids_.begin());
  }
  const std::vector<std::size_t>& referential() const { return referential_; }
  const std::vector<std::size_t>& affective() const { return affective_; }
  // Member endpoints of referential()[k].
  std::pair<int, int> endpoints(std::size_t k) const { return endpoints_[k]; }
  int pair_hypothesis(int a, int b) const { return pair_[a][b]; }
  const Evaluator& evaluator() const { return evaluator_; }

  // A class assignment is valid when each class holds at most one member per
  // image and every pair in a class has a referential hypothesis.
  bool Valid(const std::vector<int>& class_of) const {
    const int m = num_members();
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (class_of[a] != class_of[b]) continue;
        if (image_[a] == image_[b] || pair_[a][b] < 0) return false;
      }
    }
    return true;
  }

  // Accepted mask: all in-class pairs, the chosen affective hypotheses, and
  // every causal hypothesis left with positive effective evidence.
  std::vector<bool> Materialize(const std::vector<int>& class_of,
                                const std::vector<bool>& affective_on) const {
    const HypothesisPool& pool = evaluator_.pool();
    std::vector<bool> mask(pool.size(), false);
    for (std::size_t k = 0; k < referential_.size(); ++k) {
      const auto [a, b] = endpoints_[k];
      if (class_of[a] == class_of[b]) mask[referential_[k]] = true;
    }
    for (std::size_t k = 0; k < affective_.size(); ++k) {
      if (affective_on[k]) mask[affective_[k]] = true;
    }
    std::vector<std::size_t> positive;
    for (const std::size_t i : causal_) {
      if (EffectiveScore(pool, i, mask) > 0.0) positive.push_back(i);
    }
    for (const std::size_t i : positive) mask[i] = true;
    return mask;
  }

 private:
  const Evaluator& evaluator_;
  std::vector<std::size_t> referential_;
  std::vector<std::size_t> causal_;
  std::vector<std::size_t> affective_;
  std::vector<std::string> member_ids_;
  std::vector<int> image_;
  std::vector<std::vector<int>> pair_;
  std::vector<std::pair<int, int>> endpoints_;
};

// Relabels so each class is named by its smallest member.
void Canonicalize(std::vector<int>& class_of) {
  std::map<int, int> first;
  for (int x = 0; x < static_cast<int>(class_of.size()); ++x) {
    first.try_emplace(class_of[x], x);
  }
  for (int& c : class_of) c = first.at(c);
}

struct State {
  std::vector<int> class_of;
  std::vector<bool> affective_on;
};

State EmptyState(const SearchSpace& space) {
  State s;
  s.class_of.resize(space.num_members());
  std::iota(s.class_of.begin(), s.class_of.end(), 0);
  s.affective_on.assign(space.affective().size(), false);
  return s;
}

// ---- Exhaustive -------------------------------------------------------------

void EnumerateShard(const SearchSpace& space, int shard, int num_shards,
                    Incumbent& incumbent) {
  const std::size_t num_ref = space.referential().size();
  const std::size_t num_aff = space.affective().size();
  const int m = space.num_members();
  std::vector<int> parent(m);
  std::vector<int> size(m);
  for (std::uint64_t ref_mask = shard; ref_mask < (std::uint64_t{1} << num_ref);
       ref_mask += num_shards) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int chosen = 0;
    for (std::size_t k = 0; k < num_ref; ++k) {
      if (!(ref_mask >> k & 1)) continue;
      ++chosen;
      const auto [a, b] = space.endpoints(k);
      const int ra = find(a);
      const int rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> class_of(m);
    std::fill(size.begin(), size.end(), 0);
    for (int x = 0; x < m; ++x) {
      class_of[x] = find(x);
      ++size[class_of[x]];
    }
    // Closed under transitivity iff the chosen pairs are all in-class pairs.
    int implied = 0;
    for (const int s : size) implied += s * (s - 1) / 2;
    if (implied != chosen || !space.Valid(class_of)) continue;

    std::vector<bool> affective_on(num_aff, false);
    for (std::uint64_t aff_mask = 0; aff_mask < (std::uint64_t{1} << num_aff);
         ++aff_mask) {
      for (std::size_t k = 0; k < num_aff; ++k) {
        affective_on[k] = aff_mask >> k & 1;
      }
      incumbent.Offer(
          space.evaluator().Evaluate(space.Materialize(class_of, affective_on)));
    }
  }
}

SolveResult SolveExhaustive(const SearchSpace& space, const SolverOptions& options) {
  const int workers = std::max(1, options.workers);
  std::vector<Incumbent> shards(workers);
  for (Incumbent& s : shards) s.collect_pareto = options.collect_pareto;
  if (workers == 1) {
    EnumerateShard(space, 0, 1, shards[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back(EnumerateShard, std::cref(space), w, workers,
                           std::ref(shards[w]));
    }
    for (std::thread& t : threads) t.join();
  }
  Incumbent merged;
  merged.collect_pareto = options.collect_pareto;
  for (const Incumbent& s : shards) {
    if (s.best.has_value()) merged.Offer(*s.best);
    merged.archive.Merge(s.archive);
  }
  return {*merged.best, merged.archive.Sorted()};
}

// ---- Local search -----------------------------------------------------------

struct Move {
  enum class Type { kMerge, kIsolate, kMoveTo, kToggle };
  Type type;
  int a = 0;  // member, or affective slot for kToggle
  int b = 0;
};

class HillClimber {
 public:
  HillClimber(const SearchSpace& space, Incumbent& incumbent)
      : space_(space), incumbent_(incumbent) {
    for (std::size_t k = 0; k < space.referential().size(); ++k) {
      const auto [a, b] = space.endpoints(k);
      moves_.push_back({Move::Type::kMerge, a, b});
      moves_.push_back({Move::Type::kMoveTo, a, b});
      moves_.push_back({Move::Type::kMoveTo, b, a});
    }
    for (int x = 0; x < space.num_members(); ++x) {
      moves_.push_back({Move::Type::kIsolate, x, 0});
    }
    for (int k = 0; k < static_cast<int>(space.affective().size()); ++k) {
      moves_.push_back({Move::Type::kToggle, k, 0});
    }
  }

  std::size_t num_moves() const { return moves_.size(); }

  SolutionSet Evaluate(const State& s) {
    SolutionSet out = space_.evaluator().Evaluate(
        space_.Materialize(s.class_of, s.affective_on));
    incumbent_.Offer(out);
    return out;
  }

  // Applies the moves in `order`, keeping any that improves, until a full
  // pass changes nothing.
  SolutionSet Climb(State state, const std::vector<std::size_t>& order) {
    SolutionSet current = Evaluate(state);
    bool improved = true;
    while (improved) {
      improved = false;
      for (const std::size_t index : order) {
        std::optional<State> next = Apply(state, moves_[index]);
        if (!next.has_value()) continue;
        SolutionSet candidate = Evaluate(*next);
        if (Better(candidate, current)) {
          state = *std::move(next);
          current = std::move(candidate);
          improved = true;
        }
      }
    }
    return current;
  }

  // Greedy construction: free hypotheses by descending evidence, each kept
  // if the resulting classes stay valid.
  State Greedy(const std::vector<std::size_t>& pool_order) const {
    const HypothesisPool& pool = space_.evaluator().pool();
    const std::vector<bool> all(pool.size(), true);
    std::vector<std::pair<double, std::size_t>> ranked;  // (score, rank)
    for (std::size_t rank = 0; rank < pool_order.size(); ++rank) {
      ranked.emplace_back(EffectiveScore(pool, pool_order[rank], all), rank);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });

    std::map<std::size_t, std::size_t> referential_slot;
    for (std::size_t k = 0; k < space_.referential().size(); ++k) {
      referential_slot.emplace(space_.referential()[k], k);
    }
    std::map<std::size_t, std::size_t> affective_slot;
    for (std::size_t k = 0; k < space_.affective().size(); ++k) {
      affective_slot.emplace(space_.affective()[k], k);
    }

    State state = EmptyState(space_);
    for (const auto& [score, rank] : ranked) {
      const std::size_t index = pool_order[rank];
      if (const auto it = affective_slot.find(index); it != affective_slot.end()) {
        state.affective_on[it->second] = true;
        continue;
      }
      const auto it = referential_slot.find(index);
      if (it == referential_slot.end()) continue;
      const auto [a, b] = space_.endpoints(it->second);
      if (std::optional<State> next = Apply(state, {Move::Type::kMerge, a, b})) {
        state = *std::move(next);
      }
    }
    return state;
  }

 private:
  std::optional<State> Apply(const State& state, const Move& move) const {
    State next = state;
    std::vector<int>& c = next.class_of;
    switch (move.type) {
      case Move::Type::kMerge: {
        const int from = c[move.b];
        const int to = c[move.a];
        if (from == to) return std::nullopt;
        for (int& label : c) {
          if (label == from) label = to;
        }
        break;
      }
      case Move::Type::kMoveTo:
        if (c[move.a] == c[move.b]) return std::nullopt;
        c[move.a] = c[move.b];
        break;
      case Move::Type::kIsolate: {
        const int label = c[move.a];
        if (std::count(c.begin(), c.end(), label) < 2) return std::nullopt;
        // Any label unused by other members works before canonicalizing.
        c[move.a] = static_cast<int>(c.size());
        break;
      }
      case Move::Type::kToggle:
        next.affective_on[move.a] = !next.affective_on[move.a];
        return next;
    }
    Canonicalize(c);
    if (!space_.Valid(c)) return std::nullopt;
    return next;
  }

  const SearchSpace& space_;
  Incumbent& incumbent_;
  std::vector<Move> moves_;
};

void Shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng() % i]);
  }
}

SolveResult SolveLocal(const SearchSpace& space, const SolverOptions& options) {
  Incumbent incumbent;
  incumbent.collect_pareto = options.collect_pareto;
  HillClimber climber(space, incumbent);

  std::vector<std::size_t> move_order(climber.num_moves());
  std::iota(move_order.begin(), move_order.end(), 0);
  std::vector<std::size_t> pool_order(space.evaluator().pool().size());
  std::iota(pool_order.begin(), pool_order.end(), 0);

  climber.Climb(EmptyState(space), move_order);

  std::mt19937_64 rng(options.seed);
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    if (restart > 0) {
      Shuffle(pool_order, rng);
      Shuffle(move_order, rng);
    }
    climber.Climb(climber.Greedy(pool_order), move_order);
  }
  return {*incumbent.best, incumbent.archive.Sorted()};
}

}  // namespace

int CountFreeChoices(const HypothesisPool& pool) {
  int n = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const HypothesisKind kind = pool.at(i).kind;
    if (kind == HypothesisKind::kReferentialIs ||
        (kind == HypothesisKind::kAffective && pool.own_score(i) > 0.0)) {
      ++n;
    }
  }
  return n;
}

absl::StatusOr<SolveResult> Solve(const HypothesisPool& pool,
                                  const SceneGraphSequence& sequence,
                                  const SolverOptions& options) {
  if (absl::Status s = options.weights.Validate(); !s.ok()) return s;
  if (options.strategy == SolverStrategy::kExhaustive) {
    const int free = CountFreeChoices(pool);
    if (free > kMaxExhaustiveChoices) {
      return absl::FailedPreconditionError(absl::StrCat(
          "exhaustive search supports at most ", kMaxExhaustiveChoices,
          " referential/affective hypotheses; the pool has ", free,
          " (use the local-search solver)"));
    }
  }
  const Evaluator evaluator(sequence, pool, options.weights);
  const SearchSpace space(evaluator);
  return options.strategy == SolverStrategy::kExhaustive
             ? SolveExhaustive(space, options)
             : SolveLocal(space, options);
}

absl::StatusOr<SolutionSet> HillClimbFrom(const HypothesisPool& pool,
                                          const SceneGraphSequence& sequence,
                                          const ObjectiveWeights& weights,
                                          const std::vector<std::string>& start) {
  if (absl::Status s = weights.Validate(); !s.ok()) return s;
  absl::StatusOr<std::vector<FeasibilityViolation>> violations =
      CheckFeasible(start, pool, sequence);
  if (!violations.ok()) return violations.status();
  if (!violations->empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("start set is infeasible: ", violations->front().message));
  }
  const Evaluator evaluator(sequence, pool, weights);
  const SearchSpace space(evaluator);
  State state = EmptyState(space);
  for (const std::string& id : start) {
    const std::size_t index = *pool.IndexOf(id);
    const Hypothesis& h = pool.at(index);
    if (h.kind == HypothesisKind::kReferentialIs) {
      const int a = space.Member(h.subject);
      const int b = space.Member(h.object);
      const int from = state.class_of[b];
      for (int& label : state.class_of) {
        if (label == from) label = state.class_of[a];
      }
    } else if (h.kind == HypothesisKind::kAffective) {
      const auto& aff = space.affective();
      const auto it = std::find(aff.begin(), aff.end(), index);
      if (it != aff.end()) state.affective_on[it - aff.begin()] = true;
    }
  }
  Canonicalize(state.class_of);
  Incumbent incumbent;
  HillClimber climber(space, incumbent);
  std::vector<std::size_t> order(climber.num_moves());
  std::iota(order.begin(), order.end(), 0);
  return climber.Climb(std::move(state), order);
}

absl::StatusOr<SolutionSet> BruteForceOracle(const HypothesisPool& pool,
                                             const SceneGraphSequence& sequence,
                                             const ObjectiveWeights& weights) {
  if (absl::Status s = weights.Validate(); !s.ok()) return s;
  if (pool.size() > static_cast<std::size_t>(kMaxOracleHypotheses)) {
    return absl::FailedPreconditionError(
        absl::StrCat("brute-force oracle supports at most ",
                     kMaxOracleHypotheses, " hypotheses; the pool has ",
                     pool.size()));
  }
  const Evaluator evaluator(sequence, pool, weights);
  std::optional<SolutionSet> best;
  std::vector<bool> mask(pool.size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pool.size()); ++bits) {
    for (std::size_t i = 0; i < pool.size(); ++i) mask[i] = bits >> i & 1;
    absl::StatusOr<std::vector<FeasibilityViolation>> violations =
        CheckFeasible(pool.IdsOf(mask), pool, sequence);
    if (!violations.ok()) return violations.status();
    if (!violations->empty()) continue;
    SolutionSet candidate = evaluator.Evaluate(mask);
    if (!best.has_value() || Better(candidate, *best)) best = std::move(candidate);
  }
  return *best;
}

}  // namespace sensemaking
