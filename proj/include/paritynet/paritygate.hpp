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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "paritynet/circuit.hpp"

namespace paritynet {

/// Where an outcome bit of one side lands in the shared naming, possibly
/// complemented.
struct OutcomeAlias {
  std::string canonical;
  bool complement = false;
};

/// A measurement channel: a circuit, the ancillae it borrows (prepared in |0>
/// and discarded at the end) and how its outcome bits map onto shared names.
/// Names absent from `relabel` map to themselves.
struct ChannelDescription {
  Circuit circuit;
  std::vector<std::string> ancillae;
  std::map<std::string, OutcomeAlias> relabel;

  /// Circuit register with the ancillae removed, in circuit order.
  QubitRegister main_register() const;
};

/// Branches of `channel` on `input` (a state over the main register), with
/// outcomes relabelled and ancillae traced out. Throws std::domain_error if an
/// ancilla ends up entangled with the main qubits.
std::vector<BranchResult> run_channel(const ChannelDescription& channel, const PureState& input);

/// Largest per-branch discrepancy between the two channels on one input:
/// missing branches count their probability, matched branches count
/// max(|dp|, 1 - fidelity). `why` receives a description of the worst branch.
double channel_deviation(const ChannelDescription& a, const ChannelDescription& b,
                         const PureState& input, std::string* why = nullptr);

struct ChannelComparison {
  bool equal = true;
  double max_deviation = 0.0;
  std::size_t inputs_checked = 0;
  std::string counterexample;
};

/// Compares the channels on every computational basis input of the main
/// register followed by `trials` random states drawn from `seed`. Stops at
/// the first input whose deviation exceeds `tolerance`.
ChannelComparison channels_equal(const ChannelDescription& a, const ChannelDescription& b,
                                 int trials, std::uint64_t seed, double tolerance = 1e-9);

struct GateIdentity {
  std::string name;
  std::string summary;
  ChannelDescription lhs;
  ChannelDescription rhs;
};

struct IdentityOptions {
  double angle = 0.7;          // rotation on the first parity line in (a)
  double second_angle = -0.4;  // rotation on the second line in (a)
  Eigen::Matrix2cd unitary = default_unitary();  // U in (d)
  bool swap_lines = false;     // exchange the two parity-gate input lines

  static Eigen::Matrix2cd default_unitary();
};

/// The six parity-gate identities, in order (a) through (f).
std::vector<GateIdentity> builtin_identity_suite(const IdentityOptions& options = {});

/// Renames qubits in every step of `circuit` (registers are left alone).
Circuit rename_qubits(const Circuit& circuit, const std::map<std::string, std::string>& renames);

}  // namespace paritynet
