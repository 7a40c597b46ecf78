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

#include "paritynet/graphstate.hpp"

#include <algorithm>
#include <stdexcept>

namespace paritynet {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

Graph Graph::random(int vertex_count, double density, std::mt19937_64& rng) {
  Graph g(vertex_count);
  std::bernoulli_distribution coin(density);
  for (int a = 0; a < vertex_count; ++a)
    for (int b = a + 1; b < vertex_count; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("graph states are defined on simple graphs (loop)");
  if (!edges_.insert(key(a, b)).second) throw std::invalid_argument("repeated edge");
}

void Graph::toggle_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("loop");
  if (!edges_.erase(key(a, b))) edges_.insert(key(a, b));
}

bool Graph::has_edge(int a, int b) const { return edges_.count(key(a, b)) > 0; }

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph::Edge> Graph::edges() const { return {edges_.begin(), edges_.end()}; }

std::set<int> Graph::component_of(int v) const {
  std::set<int> seen{v};
  std::vector<int> todo{v};
  while (!todo.empty()) {
    const int u = todo.back();
    todo.pop_back();
    for (int w : neighbors(u)) {
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

std::string vertex_label(int v) { return "v" + std::to_string(v); }

QubitRegister graph_register(int vertex_count) {
  std::vector<std::string> labels;
  for (int v = 0; v < vertex_count; ++v) labels.push_back(vertex_label(v));
  return QubitRegister::of(labels);
}

PureState graph_state(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  if (n > kMaxQubits) throw std::invalid_argument("graph has more than 24 vertices");
  PureState s = plus_state(graph_register(graph.vertex_count()));
  for (const auto& [a, b] : graph.edges()) {
    apply_cz<Complex>(s.mutable_amplitudes(), qubit_mask(a, n), qubit_mask(b, n));
  }
  return s;
}

PauliString stabilizer_generator(const Graph& graph, int v) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  auto k = PauliString::single(n, v, PauliFactor::X);
  for (int u : graph.neighbors(v)) k = PauliString::single(n, u, PauliFactor::Z) * k;
  return k;
}

bool stabilizer_check(const PureState& state, const Graph& graph, double tolerance) {
  if (state.num_qubits() != static_cast<std::size_t>(graph.vertex_count())) return false;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const auto image = apply_pauli_string(state, stabilizer_generator(graph, v));
    if ((image.amplitudes() - state.amplitudes()).cwiseAbs().maxCoeff() > tolerance) return false;
  }
  return true;
}

Graph fused_graph(const Graph& graph, int q1, int q2) {
  Graph out = graph;
  for (int k : graph.neighbors(q1)) {
    out.toggle_edge(q1, k);
    if (k != q2) out.toggle_edge(q2, k);
  }
  out.toggle_edge(q1, q2);
  return out;
}

Circuit parity_fusion_circuit(const Graph& graph, int q1, int q2) {
  if (q1 == q2) throw std::invalid_argument("fusion needs two distinct vertices");
  if (graph.has_edge(q1, q2)) throw std::invalid_argument("fusion vertices must not share an edge");
  Circuit c(graph_register(graph.vertex_count()));
  c.add(ParityMeasurement{vertex_label(q1), vertex_label(q2), "p"});
  c.add(Gate::h(vertex_label(q1)));
  return c;
}

std::vector<FusionBranch> parity_fuse(const Graph& graph, int q1, int q2) {
  const auto circuit = parity_fusion_circuit(graph, q1, q2);
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  const auto predicted = fused_graph(graph, q1, q2);
  std::vector<FusionBranch> out;
  for (auto& b : execute_all_branches(circuit, graph_state(graph))) {
    const int p = b.outcomes.at("p");
    PauliString correction(n);
    if (p) {
      correction = PauliString::single(n, q2, PauliFactor::X);
      for (int k : graph.neighbors(q2)) correction = PauliString::single(n, k, PauliFactor::Z) * correction;
    }
    auto corrected = apply_pauli_string(b.state, correction);
    out.push_back({p, b.probability, std::move(b.state), predicted, std::move(correction), std::move(corrected)});
  }
  return out;
}

}  // namespace paritynet
