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

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paritynet/qstate.hpp"

namespace paritynet {

/// Named classical bits produced by measurements.
using Outcomes = std::map<std::string, int>;

/// Branches below this Born probability are dropped during enumeration.
inline constexpr double kPruneThreshold = 1e-12;

/// Boolean expression over outcome bits built from XOR (^), AND (&), the
/// constants 0 and 1, and parentheses. Stored in algebraic normal form, so two
/// conditions compare equal iff they are the same Boolean function.
class Condition {
 public:
  /// The always-true condition of an unconditional gate.
  Condition() = default;

  /// Throws std::invalid_argument on syntax errors.
  static Condition parse(std::string_view text);
  static Condition variable(std::string name);

  bool unconditional() const { return unconditional_; }
  /// Throws std::out_of_range if a referenced bit is unassigned.
  bool evaluate(const Outcomes& outcomes) const;
  std::set<std::string> variables() const;
  /// Source text, or "1" for an unconditional gate.
  const std::string& text() const { return text_; }

  friend bool operator==(const Condition& a, const Condition& b) {
    return a.unconditional_ == b.unconditional_ && a.terms_ == b.terms_;
  }

 private:
  // XOR of monomials; a monomial is the AND of its variables (empty = 1).
  using Monomial = std::set<std::string>;
  std::set<Monomial> terms_{Monomial{}};
  bool unconditional_ = true;
  std::string text_ = "1";

  friend class ConditionParser;
};

enum class GateKind { H, X, Z, PhaseRotation, CNOT, CZ, ControlledU };

std::string_view to_string(GateKind kind);

/// A unitary step, optionally classically controlled. Single-qubit kinds use
/// `qubits[0]`; two-qubit kinds store {control, target} (CZ is symmetric).
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::string> qubits;
  double angle = 0.0;  // PhaseRotation: exp(i angle Z)
  Eigen::Matrix2cd unitary = Eigen::Matrix2cd::Identity();  // ControlledU
  Condition condition;

  static Gate h(std::string q);
  static Gate x(std::string q);
  static Gate z(std::string q);
  static Gate phase_rotation(std::string q, double angle);
  static Gate cnot(std::string control, std::string target);
  static Gate cz(std::string a, std::string b);
  static Gate controlled_u(std::string control, std::string target, const Eigen::Matrix2cd& u);

  /// Copy of this gate that only fires when `expr` evaluates to 1.
  Gate when(std::string_view expr) const;
  Gate when(Condition c) const;

  bool conditional() const { return !condition.unconditional(); }
};

/// Non-destructive projective measurement of q1 xor q2.
struct ParityMeasurement {
  std::string q1;
  std::string q2;
  std::string outcome;
};

/// Computational-basis measurement of one qubit; the qubit is left in |outcome>
/// and is not used afterwards by the protocols that need it.
struct ZMeasurement {
  std::string qubit;
  std::string outcome;
};

using Step = std::variant<Gate, ParityMeasurement, ZMeasurement>;

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(QubitRegister reg) : register_(std::move(reg)) {}

  /// Validates labels, outcome uniqueness and that conditions only use bits
  /// bound by earlier steps (or listed in `external_bits`).
  Circuit& add(Step step);
  Circuit& add(const Circuit& tail);

  /// Outcome names bound by measurements in some earlier circuit; conditions
  /// may refer to them.
  Circuit& allow_external_bits(const std::set<std::string>& names);

  const QubitRegister& qubits() const { return register_; }
  const std::vector<Step>& steps() const { return steps_; }
  const std::set<std::string>& bound_outcomes() const { return bound_; }
  std::size_t measurement_count() const;

 private:
  void check_label(const std::string& label) const;

  QubitRegister register_;
  std::vector<Step> steps_;
  std::set<std::string> bound_;
  std::set<std::string> external_;
};

struct BranchResult {
  Outcomes outcomes;
  double probability = 1.0;
  PureState state;
};

struct MeasurementBranch {
  int value = 0;
  double probability = 0.0;
  PureState state;
};

/// Applies `gate` iff its condition holds under `classical`.
PureState apply_gate(const PureState& state, const Gate& gate, const Outcomes& classical = {});

/// Both parity branches (p = 0 first); null branches are omitted.
std::vector<MeasurementBranch> parity_measure(const PureState& state, std::string_view q1,
                                              std::string_view q2);

/// Both computational-basis branches of one qubit (0 first).
std::vector<MeasurementBranch> z_measure(const PureState& state, std::string_view q);

/// Depth-first expansion over every measurement outcome. `prior` supplies
/// already-known classical bits and a probability weight for continuing an
/// earlier enumeration.
std::vector<BranchResult> execute_all_branches(const Circuit& circuit, const PureState& input,
                                               const Outcomes& prior = {},
                                               double prior_probability = 1.0);

/// Runs `circuit` on every branch of `branches`, multiplying probabilities
/// and merging outcome maps.
std::vector<BranchResult> continue_branches(const Circuit& circuit,
                                            const std::vector<BranchResult>& branches);

/// One branch drawn with Born probabilities from a generator seeded with
/// `seed`; equal (circuit, input, seed) give bit-identical results.
BranchResult execute_sample(const Circuit& circuit, const PureState& input, std::uint64_t seed);

}  // namespace paritynet
