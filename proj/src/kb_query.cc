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

#include "sensemaking/kb_query.h"

#include <algorithm>
#include <set>

namespace sensemaking {

namespace {

class PathSearch {
 public:
  PathSearch(const KnowledgeBase& kb, const ConceptId& dst,
             CoherenceCategory category, int max_len)
      : kb_(kb), dst_(dst), category_(category), max_len_(max_len) {}

  std::vector<KBPath> Run(const ConceptId& src) {
    on_path_.insert(src);
    Extend(src);
    return std::move(found_);
  }

 private:
  void Extend(const ConceptId& at) {
    if (static_cast<int>(steps_.size()) >= max_len_) return;
    for (const KnowledgeBase::Adjacent& adj : kb_.Incident(at)) {
      if (kb_.category(adj.edge) != category_) continue;
      PathStep step{kb_.edges()[adj.edge], adj.inverse};
      const ConceptId next = step.To();
      if (on_path_.contains(next)) continue;
      steps_.push_back(std::move(step));
      if (next == dst_) {
        found_.push_back(KBPath{steps_, category_});
      } else {
        on_path_.insert(next);
        Extend(next);
        on_path_.erase(next);
      }
      steps_.pop_back();
    }
  }

  const KnowledgeBase& kb_;
  const ConceptId& dst_;
  const CoherenceCategory category_;
  const int max_len_;
  std::set<ConceptId> on_path_;
  std::vector<PathStep> steps_;
  std::vector<KBPath> found_;
};

}  // namespace

std::vector<KBPath> FindPaths(const KnowledgeBase& kb, const ConceptId& src,
                              const ConceptId& dst, CoherenceCategory category,
                              int max_len) {
  if (!kb.Contains(src) || !kb.Contains(dst)) return {};
  if (src == dst) return {KBPath{{}, category}};

  std::vector<KBPath> paths = PathSearch(kb, dst, category, max_len).Run(src);
  std::sort(paths.begin(), paths.end(), [](const KBPath& a, const KBPath& b) {
    if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
    return a.steps < b.steps;
  });
  return paths;
}

double PathScore(const KBPath& path) {
  if (path.steps.empty()) return 1.0;
  double sum = 0.0;
  for (const PathStep& s : path.steps) sum += s.edge.weight;
  return sum / static_cast<double>(path.steps.size());
}

std::vector<AffectiveNeighbor> AffectiveNeighbors(const KnowledgeBase& kb,
                                                  const ConceptId& event_concept) {
  std::vector<AffectiveNeighbor> out;
  for (const KnowledgeBase::Adjacent& adj : kb.Incident(event_concept)) {
    if (adj.inverse) continue;
    if (kb.category(adj.edge) != CoherenceCategory::kAffective) continue;
    const KBEdge& e = kb.edges()[adj.edge];
    out.push_back({e.relation, e.end, e.weight});
  }
  return out;
}

}  // namespace sensemaking
