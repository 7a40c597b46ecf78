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

#include <optional>
#include <string>
#include <vector>

#include "paritynet/circuit.hpp"

namespace paritynet {

struct ProtocolBranch {
  Outcomes outcomes;
  double probability = 0.0;
  PureState raw;        // whole register right after the measurement stage
  PureState corrected;  // output qubits after feed-forward, ancillae removed
};

/// A measurement stage, its classically controlled corrections and every
/// branch of running both on `input`.
struct ProtocolRun {
  std::string name;
  Circuit circuit;
  Circuit corrections;
  std::vector<std::string> outputs;  // labels that make up `corrected`
  PureState input;
  std::optional<PureState> target;   // expected corrected output, up to phase
  std::vector<ProtocolBranch> branches;

  /// Measurement stage followed by the corrections.
  Circuit full_circuit() const;
  /// Smallest fidelity of a corrected output with `target` (1 without one).
  double min_target_fidelity() const;
  /// Smallest pairwise fidelity between corrected outputs of two branches.
  double min_pairwise_fidelity() const;
  double total_probability() const;
};

/// Enumerates `circuit`, applies `corrections` to every branch and keeps the
/// factor on `outputs` (all qubits when empty).
ProtocolRun run_protocol(std::string name, Circuit circuit, Circuit corrections, PureState input,
                         std::vector<std::string> outputs = {},
                         std::optional<PureState> target = std::nullopt);

/// H (x) H then P on |xy>; each branch is (-1)^{py}|B_{p, x^y}>, and X^p on
/// the second qubit maps it to |B_{0, x^y}>.
ProtocolRun prepare_bell(int x, int y);

enum class AnalyzerVariant { two_hadamard, four_hadamard };

struct AnalyzerOutcome {
  int i = 0;  // parity bit
  int j = 0;  // sign bit
  double probability = 0.0;
  PureState state;
};

/// P -> H (x) H -> P, plus a closing H (x) H for the four-Hadamard variant.
Circuit bell_analyzer_circuit(AnalyzerVariant variant, const QubitRegister& reg);
std::vector<AnalyzerOutcome> bell_analyzer(const PureState& state, AnalyzerVariant variant);

struct TeleportBranch {
  int p1 = 0;
  int p2 = 0;
  double probability = 0.0;
  PureState joint;          // Alice's pair and Bob's qubit before correction
  PureState alice;          // factor on (a1, a2)
  PureState bob;            // factor on b before correction
  PureState corrected_bob;  // Z^{p2} X^{p1} applied to bob
};

/// Teleports the single-qubit `psi` from a1 to b using a shared Phi+ on (a2, b)
/// and the P -> H (x) H -> P analyzer on Alice's pair.
ProtocolRun teleport_run(const PureState& psi);
std::vector<TeleportBranch> teleport(const PureState& psi);

/// j with j_1 = 0 and j_i = j_{i-1} xor p_i, for p = (0, p_2, ..., p_n).
BinaryVector prefix_xor(const BinaryVector& p);

/// H on n qubits followed by P on (1,2), ..., (n-1,n); outcomes p2..pn.
/// Every branch equals X(j)|GHZ_n> and the corrections X(j) restore |GHZ_n>.
ProtocolRun ghz_chain(std::size_t n);

/// Parity vector (0, p2, ..., pn) read back from chain outcomes.
BinaryVector chain_parities(const Outcomes& outcomes, std::size_t n, const std::string& prefix = "p");

/// One P between the last qubit of GHZ_n and the first of GHZ_m; branch p is
/// (I_n (x) X^{(x) m})^p |GHZ_{n+m}>.
ProtocolRun ghz_fusion(std::size_t n, std::size_t m);

/// Ancilla-mediated CZ: P(q1,anc) -> H(anc) -> P(anc,q2) -> H(anc) -> Z readout
/// of anc, then Z^{p2} on q1 and Z^{p1 xor a} on q2.
ProtocolRun cz_via_parity(const PureState& input);

/// Dense CZ on a two-qubit state (used as a reference).
PureState apply_cz(const PureState& state);

}  // namespace paritynet
