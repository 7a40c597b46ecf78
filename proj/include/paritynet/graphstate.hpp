// Copyright 2026 The paritynet Authors
//
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

#pragma once

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paritynet/circuit.hpp"

namespace paritynet {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  explicit Graph(int vertex_count = 0);
  Graph(int vertex_count, const std::vector<Edge>& edges);

  /// Erdos-Renyi graph with edge probability `density`.
  static Graph random(int vertex_count, double density, std::mt19937_64& rng);

  int vertex_count() const { return n_; }
  /// Throws on loops, out-of-range vertices and repeated edges.
  void add_edge(int a, int b);
  void toggle_edge(int a, int b);
  bool has_edge(int a, int b) const;
  /// Sorted neighbours of v.
  std::vector<int> neighbors(int v) const;
  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<Edge> edges() const;
  /// Vertices in the same connected component as v.
  std::set<int> component_of(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  static Edge key(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  int n_ = 0;
  std::set<Edge> edges_;
};

/// Register v0..v{n-1} used for graph states.
QubitRegister graph_register(int vertex_count);
std::string vertex_label(int v);

/// prod_{(a,b) in E} CZ_ab |+>^n.
PureState graph_state(const Graph& graph);

/// K_v = X_v prod_{u in N(v)} Z_u.
PauliString stabilizer_generator(const Graph& graph, int v);

/// True iff K_v|state> = |state> within `tolerance` (max amplitude) for all v.
bool stabilizer_check(const PureState& state, const Graph& graph, double tolerance = 1e-9);

/// Graph after a parity fusion of q1 and q2: q2's neighbourhood becomes
/// N(q2) xor N(q1) and q1 becomes a leaf hanging off q2.
Graph fused_graph(const Graph& graph, int q1, int q2);

struct FusionBranch {
  int parity = 0;
  double probability = 0.0;
  PureState state;           // after P(q1,q2) and H(q1)
  Graph predicted;           // fused_graph(G, q1, q2)
  PauliString correction;    // X_{q2}^p prod_{k in N(q2)} Z_k^p (original neighbours)
  PureState corrected;       // correction applied to `state`
};

/// P(q1, q2) then H(q1) on graph_state(G); (q1, q2) must not be an edge.
Circuit parity_fusion_circuit(const Graph& graph, int q1, int q2);
std::vector<FusionBranch> parity_fuse(const Graph& graph, int q1, int q2);

}  // namespace paritynet
