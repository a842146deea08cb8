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

#include "sensemaking/graph_metrics.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace sensemaking {

int UndirectedGraph::AddNode() {
  adjacency_.emplace_back();
  return num_nodes() - 1;
}

bool UndirectedGraph::AddEdge(int u, int v) {
  if (u == v) return false;
  std::vector<int>& nu = adjacency_[u];
  const auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  std::vector<int>& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
  return true;
}

bool UndirectedGraph::HasEdge(int u, int v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

bool IsConnected(const UndirectedGraph& graph) {
  const int n = graph.num_nodes();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const int v : graph.Neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == n;
}

namespace {

// Residual network of the split graph: node v becomes in(v) = 2v and
// out(v) = 2v + 1 joined by a unit arc; each undirected edge becomes two
// unit arcs out(u) -> in(v) and out(v) -> in(u).
class SplitFlowNetwork {
 public:
  SplitFlowNetwork(const UndirectedGraph& graph, int source, int sink)
      : head_(2 * graph.num_nodes(), -1) {
    constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;
    for (int v = 0; v < graph.num_nodes(); ++v) {
      const int cap = (v == source || v == sink) ? kUnbounded : 1;
      AddArc(2 * v, 2 * v + 1, cap);
      for (const int w : graph.Neighbors(v)) AddArc(2 * v + 1, 2 * w, 1);
    }
  }

  // One BFS augmentation of one unit; false when no path remains.
  bool Augment(int from, int to) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{from};
    seen[from] = 1;
    while (!queue.empty() && !seen[to]) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a != -1; a = next_[a]) {
        const int v = target_[a];
        if (capacity_[a] > 0 && !seen[v]) {
          seen[v] = 1;
          via[v] = a;
          queue.push_back(v);
        }
      }
    }
    if (!seen[to]) return false;
    for (int v = to; v != from; v = target_[via[v] ^ 1]) {
      --capacity_[via[v]];
      ++capacity_[via[v] ^ 1];
    }
    return true;
  }

 private:
  void AddArc(int u, int v, int cap) {
    target_.push_back(v);
    capacity_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(target_.size()) - 1;
    target_.push_back(u);
    capacity_.push_back(0);
    next_.push_back(head_[v]);
    head_[v] = static_cast<int>(target_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<int> target_;
  std::vector<int> capacity_;
  std::vector<int> next_;
};

}  // namespace

int LocalVertexConnectivity(const UndirectedGraph& graph, int source, int sink,
                            int limit) {
  SplitFlowNetwork network(graph, source, sink);
  int flow = 0;
  while (flow < limit && network.Augment(2 * source + 1, 2 * sink)) ++flow;
  return flow;
}

int VertexConnectivity(const UndirectedGraph& graph) {
  const int n = graph.num_nodes();
  if (n < 2 || !IsConnected(graph)) return 0;
  int bound = n - 1;
  for (int v = 0; v < n; ++v) {
    bound = std::min(bound, static_cast<int>(graph.Neighbors(v).size()));
  }
  // Some minimum separator misses one of the first (bound + 1) nodes, so
  // pairing each of those with every non-neighbour finds it.
  for (int i = 0; i < n && i <= bound; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (graph.HasEdge(i, j)) continue;
      bound = std::min(bound, LocalVertexConnectivity(graph, i, j, bound));
    }
  }
  return bound;
}

double Density(const UndirectedGraph& graph) {
  const double n = graph.num_nodes();
  if (n < 2) return 0.0;
  return graph.num_edges() / (n * (n - 1) / 2.0);
}

}  // namespace sensemaking
