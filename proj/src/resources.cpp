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

#include "paritynet/resources.hpp"

#include <stdexcept>

namespace paritynet {

std::string_view to_string(GhzScheme scheme) {
  return scheme == GhzScheme::native ? "native" : "cnot_based";
}

ResourceTally count_ghz_resources(std::size_t n, GhzScheme scheme) {
  if (n < 2) throw std::invalid_argument("GHZ resource counts need n >= 2");
  if (scheme == GhzScheme::native) return {0, 0, n - 1, n, n - 1};
  return {n - 1, n - 1, 2 * (n - 1), 5 * n - 4, 2 * (n - 1)};
}

ResourceTally tally_circuit(const Circuit& circuit) {
  ResourceTally t;
  const auto& reg = circuit.qubits();
  for (const auto& q : reg) t.ancillae += q.ancilla ? 1 : 0;
  for (const auto& step : circuit.steps()) {
    if (const auto* g = std::get_if<Gate>(&step)) {
      if (g->conditional()) {
        ++t.post_processing_ops;
      } else if (g->kind == GateKind::H) {
        ++t.hadamards;
      }
    } else if (std::holds_alternative<ParityMeasurement>(step)) {
      ++t.p_gates;
    } else {
      const auto& zm = std::get<ZMeasurement>(step);
      if (reg[reg.index_of(zm.qubit)].ancilla) ++t.ancilla_measurements;
    }
  }
  return t;
}

std::map<std::string, std::size_t> gate_census(const Circuit& circuit) {
  std::map<std::string, std::size_t> census;
  const auto& reg = circuit.qubits();
  for (const auto& step : circuit.steps()) {
    if (const auto* g = std::get_if<Gate>(&step)) {
      ++census[std::string(to_string(g->kind))];
      if (g->kind == GateKind::H && reg[reg.index_of(g->qubits[0])].role == QubitRole::mode) ++census["H@mode"];
    } else if (std::holds_alternative<ParityMeasurement>(step)) {
      ++census["P"];
    } else {
      ++census["M"];
    }
  }
  return census;
}

bool strictly_fewer(const ResourceTally& a, const ResourceTally& b) {
  return a.ancillae < b.ancillae && a.ancilla_measurements < b.ancilla_measurements && a.p_gates < b.p_gates &&
         a.hadamards < b.hadamards && a.post_processing_ops < b.post_processing_ops;
}

}  // namespace paritynet
