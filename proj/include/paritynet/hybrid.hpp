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

#include <string>
#include <vector>

#include "paritynet/circuit.hpp"

namespace paritynet {

/// n electrons, each carrying a spin qubit s<i> and a mode qubit k<i>
/// (i = 1..n), laid out as s1, k1, s2, k2, ... Spin up/down is |0>/|1>.
class ElectronArray {
 public:
  explicit ElectronArray(std::size_t electrons);

  std::size_t size() const { return n_; }
  const QubitRegister& qubits() const { return register_; }
  /// 1-based electron numbering.
  const std::string& spin(std::size_t electron) const;
  const std::string& mode(std::size_t electron) const;
  std::vector<std::string> spin_labels() const;
  std::vector<std::string> mode_labels() const;

 private:
  std::size_t n_;
  QubitRegister register_;
};

/// True iff every parity measurement in `circuit` acts on two mode qubits.
bool parity_on_modes_only(const Circuit& circuit);

/// H on the mode, then a spin flip controlled by the mode: |up 0> becomes
/// (|up 0> + |down 1>)/sqrt 2.
void append_spin_mode_epr(Circuit& circuit, const ElectronArray& array, std::size_t electron);

/// Applies the EPR preparation to `electron`, which must be in |up 0>.
PureState prepare_spin_mode_epr(const PureState& state, const ElectronArray& array, std::size_t electron);

struct HybridBranch {
  BinaryVector p;        // first mode chain, (0, p2, ..., pn)
  BinaryVector p_prime;  // second mode chain
  BinaryVector j;        // prefix xor of p
  BinaryVector m;        // prefix xor of p_prime
  double probability = 0.0;
  PureState after_first_chain;  // X(j)_s X(j)_k |GHZ_2n>
  PureState final_state;        // before corrections
  PureState corrected;          // |GHZ_n>_s |GHZ_n>_k up to phase
};

struct HybridGhzRun {
  ElectronArray array;
  Circuit first_stage;   // EPR preparation and the first parity chain (p2..pn)
  Circuit second_stage;  // H on modes, odd-n CZ, second chain (p2'..pn')
  Circuit corrections;
  PureState target;      // |GHZ_n>_s (x) |GHZ_n>_k in array order
  std::vector<HybridBranch> branches;

  Circuit full_circuit() const;
  double min_target_fidelity() const;
  double min_pairwise_fidelity() const;
};

/// Spin and mode GHZ states from n single-electron EPR pairs using only
/// mode-qubit Hadamards and charge-parity measurements. 2 <= n <= 10.
HybridGhzRun hybrid_ghz(std::size_t n);

/// The two-electron case: entanglement swapping that ends in EPR_s (x) EPR_k.
HybridGhzRun hybrid_swap_two();

/// Closed forms of the checkpoints, built directly from Pauli strings.
PureState hybrid_after_first_chain(const ElectronArray& array, const BinaryVector& j);
PureState hybrid_final_state(const ElectronArray& array, const BinaryVector& j, const BinaryVector& m);
/// |GHZ_n>_s (x) |GHZ_n>_k in array order.
PureState spin_mode_ghz(const ElectronArray& array);

struct NewCzBranch {
  int p1 = 0;
  int p2 = 0;
  int p3 = 0;
  double probability = 0.0;
  PureState raw;              // s1 k1 s2 k2 before corrections
  PureState spins;            // spin factor before corrections
  PureState modes;            // mode factor, |B_{p3 p2}> up to phase
  PureState corrected_spins;  // CZ applied to the input, up to phase
  PureState corrected;        // whole register after corrections
};

struct NewCzRun {
  ElectronArray array{2};
  Circuit circuit;
  Circuit corrections;
  PureState input;
  std::vector<NewCzBranch> branches;

  Circuit full_circuit() const;
};

/// Spin CZ using the two mode qubits as ancillae: two spin-to-mode CNOTs,
/// four mode Hadamards and three mode parity measurements.
Circuit new_cz_circuit(const ElectronArray& array);
Circuit new_cz_corrections(const ElectronArray& array);

/// Runs the gate on a two-spin state (modes start in |00>).
NewCzRun new_cz(const PureState& spins);
/// Runs the gate on a full s1 k1 s2 k2 state whose modes must be |00>.
NewCzRun new_cz_on(const PureState& full);

struct ResetBranch {
  int r = 0;
  double probability = 0.0;
  PureState state;
};

/// Z readout of k1 -> r, then X^r on k1 and X^{p3 xor r} on k2. The modes
/// must be in a Bell state |B_{p3, *}>.
Circuit reset_modes_circuit(const ElectronArray& array);
std::vector<ResetBranch> reset_modes_after_cz(const PureState& state, int p3);

}  // namespace paritynet
