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

#ifndef SENSEMAKING_GRAPH_METRICS_H_
#define SENSEMAKING_GRAPH_METRICS_H_

#include <vector>

namespace sensemaking {

// Simple undirected graph: no self-loops, parallel edges collapse.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(int num_nodes = 0) : adjacency_(num_nodes) {}

  int AddNode();
  // Returns false for self-loops and edges already present.
  bool AddEdge(int u, int v);
  bool HasEdge(int u, int v) const;

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  // Sorted ascending.
  const std::vector<int>& Neighbors(int u) const { return adjacency_[u]; }

 private:
  std::vector<std::vector<int>> adjacency_;
  int num_edges_ = 0;
};

bool IsConnected(const UndirectedGraph& graph);

// Maximum number of internally vertex-disjoint paths between two distinct,
// non-adjacent nodes, computed by unit-capacity max-flow on the split graph.
// Stops early once `limit` paths are found.
int LocalVertexConnectivity(const UndirectedGraph& graph, int source, int sink,
                            int limit);

// Minimum number of nodes whose removal disconnects the graph; n - 1 for a
// complete graph, 0 when disconnected or with fewer than two nodes.
int VertexConnectivity(const UndirectedGraph& graph);

// |E| / (|V| (|V| - 1) / 2), or 0 below two nodes.
double Density(const UndirectedGraph& graph);

}  // namespace sensemaking

#endif  // SENSEMAKING_GRAPH_METRICS_H_
