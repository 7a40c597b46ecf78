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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paritynet/kernels.hpp"

namespace paritynet {

using Complex = std::complex<double>;

/// Dense states are capped at this many qubits.
inline constexpr std::size_t kMaxQubits = 24;

/// Tolerance on the L2 norm of every state handed out by the library.
inline constexpr double kNormTolerance = 1e-10;

enum class QubitRole { spin, mode };

std::string_view to_string(QubitRole role);
QubitRole qubit_role_from_string(std::string_view text);

struct Qubit {
  std::string label;
  QubitRole role = QubitRole::spin;
  std::optional<int> electron;
  // Set by protocol builders for qubits that only serve as ancillae.
  bool ancilla = false;

  friend bool operator==(const Qubit&, const Qubit&) = default;
};

/// Ordered list of uniquely labelled qubits.
class QubitRegister {
 public:
  QubitRegister() = default;
  explicit QubitRegister(std::vector<Qubit> qubits);

  /// Register of plain spin-role qubits with the given labels.
  static QubitRegister of(std::initializer_list<std::string_view> labels);
  static QubitRegister of(const std::vector<std::string>& labels);

  std::size_t size() const { return qubits_.size(); }
  bool empty() const { return qubits_.empty(); }
  const Qubit& operator[](std::size_t i) const { return qubits_[i]; }
  const std::vector<Qubit>& qubits() const { return qubits_; }
  auto begin() const { return qubits_.begin(); }
  auto end() const { return qubits_.end(); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws std::invalid_argument for unknown labels.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  std::vector<std::string> labels() const;

  /// Mask of `label`'s bit in an amplitude index over this register.
  Index mask_of(std::string_view label) const;

  /// Concatenation; labels must stay unique.
  QubitRegister operator+(const QubitRegister& other) const;

  /// True when every electron index owns exactly one spin and one mode qubit
  /// and no qubit lacks an electron index.
  bool is_complete_hybrid() const;

  friend bool operator==(const QubitRegister&, const QubitRegister&) = default;

 private:
  std::vector<Qubit> qubits_;
};

/// Element of Z_2^n.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t n) : bits_(n, 0) {}
  BinaryVector(std::initializer_list<int> bits);
  explicit BinaryVector(const std::vector<int>& bits);

  /// Bits of `value` with entry 0 as the most significant bit.
  static BinaryVector from_index(Index value, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, int bit);
  Index to_index() const;
  BinaryVector complement() const;

  friend BinaryVector operator^(const BinaryVector& a, const BinaryVector& b);
  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

  std::string to_string() const;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Sum of the entries mod 2.
int binary_parity(const BinaryVector& v);

enum class PauliFactor : std::uint8_t { I = 0, X = 1, Z = 2, XZ = 3 };

/// Unit phases i^k, stored as k mod 4.
class PhaseFactor {
 public:
  constexpr PhaseFactor() = default;
  static constexpr PhaseFactor plus_one() { return PhaseFactor(0); }
  static constexpr PhaseFactor plus_i() { return PhaseFactor(1); }
  static constexpr PhaseFactor minus_one() { return PhaseFactor(2); }
  static constexpr PhaseFactor minus_i() { return PhaseFactor(3); }

  Complex value() const;
  constexpr int power_of_i() const { return power_; }
  constexpr PhaseFactor operator*(PhaseFactor o) const { return PhaseFactor(power_ + o.power_); }
  friend constexpr bool operator==(PhaseFactor, PhaseFactor) = default;

 private:
  constexpr explicit PhaseFactor(int power) : power_(((power % 4) + 4) % 4) {}
  int power_ = 0;
};

/// Tensor product of single-qubit factors from {I, X, Z, XZ} times a phase.
/// The XZ factor is the operator product X·Z, i.e. Z acts first.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : factors_(n, PauliFactor::I) {}
  PauliString(std::vector<PauliFactor> factors, PhaseFactor phase = {})
      : factors_(std::move(factors)), phase_(phase) {}

  /// X(v) = prod_i X_i^{v_i}.
  static PauliString x(const BinaryVector& v);
  /// Z(v) = prod_i Z_i^{v_i}.
  static PauliString z(const BinaryVector& v);
  /// Single factor on qubit `q` of an n-qubit string.
  static PauliString single(std::size_t n, std::size_t q, PauliFactor f);

  std::size_t size() const { return factors_.size(); }
  PauliFactor operator[](std::size_t i) const { return factors_[i]; }
  PhaseFactor phase() const { return phase_; }
  bool x_bit(std::size_t i) const;
  bool z_bit(std::size_t i) const;

  /// Operator product: (a * b)|psi> = a (b |psi>).
  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString&, const PauliString&) = default;

  std::string to_string() const;

 private:
  std::vector<PauliFactor> factors_;
  PhaseFactor phase_;
};

/// Normalized dense state over a register; amplitude index bit order follows
/// the register with qubit 0 most significant.
class PureState {
 public:
  /// Throws if the length is not 2^n or the norm differs from 1 by more than
  /// kNormTolerance.
  PureState(QubitRegister reg, Eigen::VectorXcd amplitudes);

  /// Rescales `amplitudes` to unit norm; throws on a null vector.
  static PureState normalized(QubitRegister reg, Eigen::VectorXcd amplitudes);

  const QubitRegister& qubits() const { return register_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::size_t num_qubits() const { return register_.size(); }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  Complex amplitude(Index i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }
  double norm() const { return amplitudes_.norm(); }

  /// Unchecked mutable access for kernels; callers restore the norm invariant.
  Eigen::VectorXcd& mutable_amplitudes() { return amplitudes_; }

 private:
  QubitRegister register_;
  Eigen::VectorXcd amplitudes_;
};

/// |j> = X(j)|0...0>.
PureState basis_state(const QubitRegister& reg, const BinaryVector& index);
PureState basis_state(const QubitRegister& reg, Index index);

/// Returns P|psi>.
PureState apply_pauli_string(const PureState& state, const PauliString& pauli);

/// |<a|b>|^2; registers must be identical.
double fidelity_up_to_global_phase(const PureState& a, const PureState& b);

/// Largest |a_i - b_i|; registers must be identical.
double max_amplitude_deviation(const PureState& a, const PureState& b);

/// (|0>|i> + (-1)^j |1>|i xor 1>) / sqrt 2 on a two-qubit register.
PureState bell_state(int i, int j, const QubitRegister& reg = QubitRegister::of({"q0", "q1"}));

/// (|0...0> + |1...1>) / sqrt 2 on `n` qubits, n >= 2.
PureState ghz_state(std::size_t n);
PureState ghz_state(const QubitRegister& reg);

/// |+>^{(x) n}.
PureState plus_state(const QubitRegister& reg);

/// Tensor product a (x) b over the concatenated register.
PureState tensor(const PureState& a, const PureState& b);

/// Reorders qubits so that the state lives on `target`, which must hold the
/// same labels (role/electron metadata is taken from `target`).
PureState permuted(const PureState& state, const QubitRegister& target);

/// Same amplitudes under a relabelled register of equal size.
PureState relabeled(const PureState& state, const QubitRegister& reg);

/// Splits a product state into (rest, part) where `part` is the factor on
/// `labels` (in the given order) and rest (x) part reproduces the state
/// exactly after permutation. Throws std::domain_error if the state is not a
/// product across that cut within `tolerance`.
std::pair<PureState, PureState> factorize(const PureState& state,
                                          const std::vector<std::string>& labels,
                                          double tolerance = 1e-9);

/// Normalized i.i.d. complex Gaussian amplitudes.
PureState random_state(const QubitRegister& reg, std::mt19937_64& rng);

/// Haar-distributed 2x2 unitary from the QR decomposition of a complex
/// Gaussian matrix.
Eigen::Matrix2cd random_unitary(std::mt19937_64& rng);

/// True when `u` is unitary within `tolerance`.
bool is_unitary(const Eigen::Matrix2cd& u, double tolerance = 1e-10);

}  // namespace paritynet
