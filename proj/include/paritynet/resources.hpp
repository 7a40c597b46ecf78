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
#include <map>
#include <string>

#include "paritynet/circuit.hpp"

namespace paritynet {

/// Resource counts in the layout of the n-GHZ comparison table.
struct ResourceTally {
  std::size_t ancillae = 0;
  std::size_t ancilla_measurements = 0;
  std::size_t p_gates = 0;
  std::size_t hadamards = 0;
  std::size_t post_processing_ops = 0;

  friend bool operator==(const ResourceTally&, const ResourceTally&) = default;
};

enum class GhzScheme { native, cnot_based };

std::string_view to_string(GhzScheme scheme);

/// Closed-form counts for preparing an n-GHZ state, n >= 2.
ResourceTally count_ghz_resources(std::size_t n, GhzScheme scheme);

/// Counts steps of an actual circuit. Post-processing ops are classically
/// conditioned gates; ancillae are register qubits flagged as such.
ResourceTally tally_circuit(const Circuit& circuit);

/// Per-kind gate counts ("H", "CNOT", "P", "M", ...), with Hadamards on
/// mode qubits also counted under "H@mode".
std::map<std::string, std::size_t> gate_census(const Circuit& circuit);

/// True iff `a` is strictly smaller than `b` in every field.
bool strictly_fewer(const ResourceTally& a, const ResourceTally& b);

}  // namespace paritynet
