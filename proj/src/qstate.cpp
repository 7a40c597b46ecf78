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

#include "paritynet/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paritynet {

std::string_view to_string(QubitRole role) {
  return role == QubitRole::spin ? "spin" : "mode";
}

QubitRole qubit_role_from_string(std::string_view text) {
  if (text == "spin") return QubitRole::spin;
  if (text == "mode") return QubitRole::mode;
  throw std::invalid_argument("unknown qubit role '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// QubitRegister

QubitRegister::QubitRegister(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {
  if (qubits_.size() > kMaxQubits) {
    throw std::invalid_argument("register exceeds " + std::to_string(kMaxQubits) + " qubits");
  }
  std::set<std::string_view> seen;
  std::map<std::pair<int, QubitRole>, int> per_electron;
  for (const auto& q : qubits_) {
    if (q.label.empty()) throw std::invalid_argument("empty qubit label");
    if (!seen.insert(q.label).second) {
      throw std::invalid_argument("duplicate qubit label '" + q.label + "'");
    }
    if (q.electron && ++per_electron[{*q.electron, q.role}] > 1) {
      throw std::invalid_argument("electron " + std::to_string(*q.electron) + " owns two " +
                                  std::string(to_string(q.role)) + " qubits");
    }
  }
}

QubitRegister QubitRegister::of(std::initializer_list<std::string_view> labels) {
  std::vector<Qubit> qubits;
  for (auto l : labels) qubits.push_back(Qubit{std::string(l)});
  return QubitRegister(std::move(qubits));
}

QubitRegister QubitRegister::of(const std::vector<std::string>& labels) {
  std::vector<Qubit> qubits;
  for (const auto& l : labels) qubits.push_back(Qubit{l});
  return QubitRegister(std::move(qubits));
}

std::optional<std::size_t> QubitRegister::find(std::string_view label) const {
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t QubitRegister::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw std::invalid_argument("unknown qubit label '" + std::string(label) + "'");
}

std::vector<std::string> QubitRegister::labels() const {
  std::vector<std::string> out;
  out.reserve(qubits_.size());
  for (const auto& q : qubits_) out.push_back(q.label);
  return out;
}

Index QubitRegister::mask_of(std::string_view label) const {
  return qubit_mask(index_of(label), size());
}

QubitRegister QubitRegister::operator+(const QubitRegister& other) const {
  auto all = qubits_;
  all.insert(all.end(), other.qubits_.begin(), other.qubits_.end());
  return QubitRegister(std::move(all));
}

bool QubitRegister::is_complete_hybrid() const {
  std::map<int, std::pair<int, int>> counts;
  for (const auto& q : qubits_) {
    if (!q.electron) return false;
    auto& c = counts[*q.electron];
    (q.role == QubitRole::spin ? c.first : c.second)++;
  }
  return std::all_of(counts.begin(), counts.end(),
                     [](const auto& kv) { return kv.second == std::pair{1, 1}; });
}

// ---------------------------------------------------------------------------
// BinaryVector

namespace {
std::uint8_t checked_bit(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("binary entries must be 0 or 1");
  return static_cast<std::uint8_t>(b);
}
}  // namespace

BinaryVector::BinaryVector(std::initializer_list<int> bits) {
  for (int b : bits) bits_.push_back(checked_bit(b));
}

BinaryVector::BinaryVector(const std::vector<int>& bits) {
  for (int b : bits) bits_.push_back(checked_bit(b));
}

BinaryVector BinaryVector::from_index(Index value, std::size_t n) {
  BinaryVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.bits_[i] = static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1);
  return v;
}

void BinaryVector::set(std::size_t i, int bit) { bits_.at(i) = checked_bit(bit); }

Index BinaryVector::to_index() const {
  Index v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

BinaryVector BinaryVector::complement() const {
  BinaryVector c = *this;
  for (auto& b : c.bits_) b ^= 1;
  return c;
}

BinaryVector operator^(const BinaryVector& a, const BinaryVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("binary vector length mismatch");
  BinaryVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c.bits_[i] ^= b.bits_[i];
  return c;
}

std::string BinaryVector::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

int binary_parity(const BinaryVector& v) {
  int p = 0;
  for (std::size_t i = 0; i < v.size(); ++i) p ^= v[i];
  return p;
}

// ---------------------------------------------------------------------------
// PauliString

Complex PhaseFactor::value() const {
  static constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[power_];
}

PauliString PauliString::x(const BinaryVector& v) {
  PauliString p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) p.factors_[i] = PauliFactor::X;
  }
  return p;
}

PauliString PauliString::z(const BinaryVector& v) {
  PauliString p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) p.factors_[i] = PauliFactor::Z;
  }
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t q, PauliFactor f) {
  PauliString p(n);
  p.factors_.at(q) = f;
  return p;
}

bool PauliString::x_bit(std::size_t i) const {
  return (static_cast<int>(factors_[i]) & 1) != 0;
}

bool PauliString::z_bit(std::size_t i) const {
  return (static_cast<int>(factors_[i]) & 2) != 0;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli string length mismatch");
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1 x2} X^{x1+x2} Z^{z1+z2}
  std::vector<PauliFactor> f(a.size());
  int sign = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int xa = a.x_bit(i), za = a.z_bit(i), xb = b.x_bit(i), zb = b.z_bit(i);
    sign ^= za & xb;
    f[i] = static_cast<PauliFactor>((xa ^ xb) | ((za ^ zb) << 1));
  }
  PhaseFactor phase = a.phase_ * b.phase_;
  if (sign) phase = phase * PhaseFactor::minus_one();
  return PauliString(std::move(f), phase);
}

std::string PauliString::to_string() const {
  static constexpr std::string_view phases[4] = {"+", "+i", "-", "-i"};
  std::string s(phases[phase_.power_of_i()]);
  for (auto f : factors_) {
    switch (f) {
      case PauliFactor::I: s += "I"; break;
      case PauliFactor::X: s += "X"; break;
      case PauliFactor::Z: s += "Z"; break;
      case PauliFactor::XZ: s += "(XZ)"; break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(QubitRegister reg, Eigen::VectorXcd amplitudes)
    : register_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
  const auto expected = Eigen::Index{1} << register_.size();
  if (amplitudes_.size() != expected) {
    throw std::invalid_argument("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                                ", expected " + std::to_string(expected));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(amplitudes_.norm()) + ")");
  }
}

PureState PureState::normalized(QubitRegister reg, Eigen::VectorXcd amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a null vector");
  amplitudes /= n;
  return PureState(std::move(reg), std::move(amplitudes));
}

PureState basis_state(const QubitRegister& reg, const BinaryVector& index) {
  if (index.size() != reg.size()) {
    throw std::invalid_argument("basis index has " + std::to_string(index.size()) +
                                " bits for a register of " + std::to_string(reg.size()));
  }
  return basis_state(reg, index.to_index());
}

PureState basis_state(const QubitRegister& reg, Index index) {
  const auto dim = Eigen::Index{1} << reg.size();
  if (static_cast<Eigen::Index>(index) >= dim) throw std::out_of_range("basis index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(reg, std::move(amps));
}

PureState apply_pauli_string(const PureState& state, const PauliString& pauli) {
  const std::size_t n = state.num_qubits();
  if (pauli.size() != n) throw std::invalid_argument("Pauli string length does not match register");
  Index xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (pauli.x_bit(q)) xmask |= qubit_mask(q, n);
    if (pauli.z_bit(q)) zmask |= qubit_mask(q, n);
  }
  // (X^x Z^z)|i> = (-1)^{popcount(i & z)} |i ^ x>
  const Complex phase = pauli.phase().value();
  Eigen::VectorXcd out(state.dimension());
  for (Eigen::Index i = 0; i < state.dimension(); ++i) {
    const auto idx = static_cast<Index>(i);
    const double sign = masked_parity(idx, zmask) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(idx ^ xmask)] = phase * sign * state.amplitudes()[i];
  }
  return PureState(state.qubits(), std::move(out));
}

namespace {
void require_same_register(const PureState& a, const PureState& b) {
  if (a.qubits().labels() != b.qubits().labels()) throw std::invalid_argument("register mismatch");
}
}  // namespace

double fidelity_up_to_global_phase(const PureState& a, const PureState& b) {
  require_same_register(a, b);
  return std::min(1.0, std::norm(a.amplitudes().dot(b.amplitudes())));
}

double max_amplitude_deviation(const PureState& a, const PureState& b) {
  require_same_register(a, b);
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

PureState bell_state(int i, int j, const QubitRegister& reg) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) throw std::invalid_argument("Bell indices must be bits");
  if (reg.size() != 2) throw std::invalid_argument("Bell states live on two qubits");
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  amps[i] = s;                        // |0>|i>
  amps[2 + (i ^ 1)] = j ? -s : s;     // (-1)^j |1>|i+1>
  return PureState(reg, std::move(amps));
}

PureState ghz_state(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  return ghz_state(QubitRegister::of(labels));
}

PureState ghz_state(const QubitRegister& reg) {
  if (reg.size() < 2) throw std::invalid_argument("GHZ states need at least 2 qubits");
  const auto dim = Eigen::Index{1} << reg.size();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps[0] = amps[dim - 1] = 1.0 / std::sqrt(2.0);
  return PureState(reg, std::move(amps));
}

PureState plus_state(const QubitRegister& reg) {
  const auto dim = Eigen::Index{1} << reg.size();
  return PureState(reg, Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

PureState tensor(const PureState& a, const PureState& b) {
  auto reg = a.qubits() + b.qubits();
  Eigen::VectorXcd amps(a.dimension() * b.dimension());
  for (Eigen::Index i = 0; i < a.dimension(); ++i) {
    amps.segment(i * b.dimension(), b.dimension()) = a.amplitudes()[i] * b.amplitudes();
  }
  return PureState::normalized(std::move(reg), std::move(amps));
}

PureState permuted(const PureState& state, const QubitRegister& target) {
  const std::size_t n = state.num_qubits();
  if (target.size() != n) throw std::invalid_argument("permutation target has a different size");
  // source qubit s -> target position
  std::vector<Index> dest_mask(n);
  for (std::size_t s = 0; s < n; ++s) {
    dest_mask[s] = qubit_mask(target.index_of(state.qubits()[s].label), n);
  }
  Eigen::VectorXcd out(state.dimension());
  for (Eigen::Index i = 0; i < state.dimension(); ++i) {
    Index j = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (static_cast<Index>(i) & qubit_mask(s, n)) j |= dest_mask[s];
    }
    out[static_cast<Eigen::Index>(j)] = state.amplitudes()[i];
  }
  return PureState(target, std::move(out));
}

PureState relabeled(const PureState& state, const QubitRegister& reg) {
  if (reg.size() != state.num_qubits()) throw std::invalid_argument("relabel size mismatch");
  return PureState(reg, state.amplitudes());
}

std::pair<PureState, PureState> factorize(const PureState& state,
                                          const std::vector<std::string>& labels,
                                          double tolerance) {
  std::vector<Qubit> part_qubits, rest_qubits;
  std::vector<bool> in_part(state.num_qubits(), false);
  for (const auto& l : labels) {
    const auto i = state.qubits().index_of(l);
    if (in_part[i]) throw std::invalid_argument("duplicate label in factor '" + l + "'");
    in_part[i] = true;
    part_qubits.push_back(state.qubits()[i]);
  }
  for (std::size_t i = 0; i < state.num_qubits(); ++i) {
    if (!in_part[i]) rest_qubits.push_back(state.qubits()[i]);
  }
  const QubitRegister rest_reg(rest_qubits), part_reg(part_qubits);
  const auto ordered = permuted(state, rest_reg + part_reg);

  // Reshape to a (rest x part) matrix; a product state is rank one.
  const Eigen::Index rows = Eigen::Index{1} << rest_reg.size();
  const Eigen::Index cols = Eigen::Index{1} << part_reg.size();
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) m.row(r) = ordered.amplitudes().segment(r * cols, cols).transpose();

  Eigen::Index br = 0, bc = 0;
  m.cwiseAbs().maxCoeff(&br, &bc);
  Eigen::VectorXcd part = m.row(br).transpose();
  part /= part.norm();
  // Fix the part's phase so its largest entry is real positive.
  part *= std::polar(1.0, -std::arg(part[bc]));
  Eigen::VectorXcd rest = m * part.conjugate();

  const Eigen::MatrixXcd residual = m - rest * part.transpose();
  if (residual.norm() > tolerance) {
    throw std::domain_error("state does not factor across the requested cut (residual " +
                            std::to_string(residual.norm()) + ")");
  }
  return {PureState::normalized(rest_reg, std::move(rest)), PureState::normalized(part_reg, std::move(part))};
}

PureState random_state(const QubitRegister& reg, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd amps(Eigen::Index{1} << reg.size());
  for (auto& a : amps) a = Complex(gauss(rng), gauss(rng));
  return PureState::normalized(reg, std::move(amps));
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix2cd g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Absorb the phases of diag(R) so the distribution is Haar.
  for (int c = 0; c < 2; ++c) q.col(c) *= std::polar(1.0, std::arg(r(c, c)));
  return q;
}

bool is_unitary(const Eigen::Matrix2cd& u, double tolerance) {
  return (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace paritynet
