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

#include "paritynet/hybrid.hpp"

#include <algorithm>
#include <stdexcept>

#include "paritynet/protocols.hpp"

namespace paritynet {

namespace {

QubitRegister electron_register(std::size_t n) {
  std::vector<Qubit> qubits;
  for (std::size_t i = 1; i <= n; ++i) {
    const int e = static_cast<int>(i);
    qubits.push_back(Qubit{"s" + std::to_string(i), QubitRole::spin, e});
    qubits.push_back(Qubit{"k" + std::to_string(i), QubitRole::mode, e});
  }
  return QubitRegister(std::move(qubits));
}

// p_2 ^ ... ^ p_i over outcome names "<stem><l><suffix>".
std::string prefix_condition(const std::string& stem, const std::string& suffix, std::size_t i) {
  std::string expr;
  for (std::size_t l = 2; l <= i; ++l) expr += (expr.empty() ? "" : "^") + stem + std::to_string(l) + suffix;
  return expr;
}

BinaryVector read_chain(const Outcomes& o, std::size_t n, const std::string& suffix) {
  BinaryVector v(n);
  for (std::size_t i = 2; i <= n; ++i) v.set(i - 1, o.at("p" + std::to_string(i) + suffix));
  return v;
}

// Weight of the amplitudes where every qubit in `labels` reads 0.
double zero_weight(const PureState& state, const std::vector<std::string>& labels) {
  Index mask = 0;
  for (const auto& l : labels) mask |= state.qubits().mask_of(l);
  double w = 0.0;
  for (Eigen::Index i = 0; i < state.dimension(); ++i) {
    if ((static_cast<Index>(i) & mask) == 0) w += std::norm(state.amplitudes()[i]);
  }
  return w;
}

// Pauli string acting as `factor` on the labelled qubits selected by `bits`.
PauliString on_labels(const QubitRegister& reg, const std::vector<std::string>& labels, const BinaryVector& bits,
                      PauliFactor factor) {
  PauliString p(reg.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (bits[i]) p = PauliString::single(reg.size(), reg.index_of(labels[i]), factor) * p;
  }
  return p;
}

}  // namespace

ElectronArray::ElectronArray(std::size_t electrons) : n_(electrons), register_(electron_register(electrons)) {
  if (electrons == 0) throw std::invalid_argument("an electron array needs at least one electron");
}

const std::string& ElectronArray::spin(std::size_t electron) const {
  if (electron < 1 || electron > n_) throw std::out_of_range("electron index out of range");
  return register_[2 * (electron - 1)].label;
}

const std::string& ElectronArray::mode(std::size_t electron) const {
  if (electron < 1 || electron > n_) throw std::out_of_range("electron index out of range");
  return register_[2 * (electron - 1) + 1].label;
}

std::vector<std::string> ElectronArray::spin_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n_; ++i) out.push_back(spin(i));
  return out;
}

std::vector<std::string> ElectronArray::mode_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n_; ++i) out.push_back(mode(i));
  return out;
}

bool parity_on_modes_only(const Circuit& circuit) {
  const auto& reg = circuit.qubits();
  return std::all_of(circuit.steps().begin(), circuit.steps().end(), [&](const Step& s) {
    const auto* pm = std::get_if<ParityMeasurement>(&s);
    return !pm || (reg[reg.index_of(pm->q1)].role == QubitRole::mode &&
                   reg[reg.index_of(pm->q2)].role == QubitRole::mode);
  });
}

void append_spin_mode_epr(Circuit& circuit, const ElectronArray& array, std::size_t electron) {
  circuit.add(Gate::h(array.mode(electron)));
  circuit.add(Gate::cnot(array.mode(electron), array.spin(electron)));
}

PureState prepare_spin_mode_epr(const PureState& state, const ElectronArray& array, std::size_t electron) {
  if (std::abs(zero_weight(state, {array.spin(electron), array.mode(electron)}) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("electron " + std::to_string(electron) + " is not in |up 0>");
  }
  Circuit c(state.qubits());
  append_spin_mode_epr(c, array, electron);
  return execute_all_branches(c, state).front().state;
}

// ---------------------------------------------------------------------------
// Hybrid GHZ

PureState spin_mode_ghz(const ElectronArray& array) {
  return permuted(tensor(ghz_state(QubitRegister::of(array.spin_labels())),
                         ghz_state(QubitRegister::of(array.mode_labels()))),
                  array.qubits());
}

PureState hybrid_after_first_chain(const ElectronArray& array, const BinaryVector& j) {
  const auto& reg = array.qubits();
  const auto flips = on_labels(reg, array.spin_labels(), j, PauliFactor::X) *
                     on_labels(reg, array.mode_labels(), j, PauliFactor::X);
  return apply_pauli_string(ghz_state(reg), flips);
}

PureState hybrid_final_state(const ElectronArray& array, const BinaryVector& j, const BinaryVector& m) {
  const auto& reg = array.qubits();
  BinaryVector first(array.size());
  if (binary_parity(m)) first.set(0, 1);
  // X(j)_s Z_{1,s}^{pi(m)} Z(j)_k X(m)_k
  const auto op = on_labels(reg, array.spin_labels(), j, PauliFactor::X) *
                  on_labels(reg, array.spin_labels(), first, PauliFactor::Z) *
                  on_labels(reg, array.mode_labels(), j, PauliFactor::Z) *
                  on_labels(reg, array.mode_labels(), m, PauliFactor::X);
  return apply_pauli_string(spin_mode_ghz(array), op);
}

Circuit HybridGhzRun::full_circuit() const {
  Circuit c = first_stage;
  c.add(second_stage);
  c.add(corrections);
  return c;
}

double HybridGhzRun::min_target_fidelity() const {
  double worst = 1.0;
  for (const auto& b : branches) worst = std::min(worst, fidelity_up_to_global_phase(b.corrected, target));
  return worst;
}

double HybridGhzRun::min_pairwise_fidelity() const {
  double worst = 1.0;
  for (std::size_t a = 0; a < branches.size(); ++a)
    for (std::size_t b = a + 1; b < branches.size(); ++b)
      worst = std::min(worst, fidelity_up_to_global_phase(branches[a].corrected, branches[b].corrected));
  return worst;
}

HybridGhzRun hybrid_ghz(std::size_t n) {
  if (n < 2 || n > 10) throw std::invalid_argument("hybrid GHZ needs 2 <= n <= 10");
  ElectronArray array(n);
  const auto& reg = array.qubits();

  Circuit first(reg);
  for (std::size_t i = 1; i <= n; ++i) append_spin_mode_epr(first, array, i);
  for (std::size_t i = 2; i <= n; ++i) {
    first.add(ParityMeasurement{array.mode(i - 1), array.mode(i), "p" + std::to_string(i)});
  }

  Circuit second(reg);
  second.allow_external_bits(first.bound_outcomes());
  for (std::size_t i = 1; i <= n; ++i) second.add(Gate::h(array.mode(i)));
  // For odd n the two surviving mode strings have opposite parity; a Z on
  // spin 1 controlled by mode 1 realigns the phases.
  if (n % 2 == 1) second.add(Gate::cz(array.spin(1), array.mode(1)));
  for (std::size_t i = 2; i <= n; ++i) {
    second.add(ParityMeasurement{array.mode(i - 1), array.mode(i), "p" + std::to_string(i) + "'"});
  }

  Circuit fix(reg);
  auto bound = first.bound_outcomes();
  bound.insert(second.bound_outcomes().begin(), second.bound_outcomes().end());
  fix.allow_external_bits(bound);
  // Undo X(j)_s Z_{1,s}^{pi(m)} Z(j)_k X(m)_k from the left.
  for (std::size_t i = 2; i <= n; ++i) fix.add(Gate::x(array.spin(i)).when(prefix_condition("p", "", i)));
  std::string parity_of_m;
  for (std::size_t i = 2; i <= n; ++i) {
    parity_of_m += (parity_of_m.empty() ? "" : "^") + std::string("(") + prefix_condition("p", "'", i) + ")";
  }
  fix.add(Gate::z(array.spin(1)).when(parity_of_m));
  for (std::size_t i = 2; i <= n; ++i) fix.add(Gate::z(array.mode(i)).when(prefix_condition("p", "", i)));
  for (std::size_t i = 2; i <= n; ++i) fix.add(Gate::x(array.mode(i)).when(prefix_condition("p", "'", i)));

  HybridGhzRun run{array, first, second, fix, spin_mode_ghz(array), {}};
  const auto start = basis_state(reg, Index{0});
  for (const auto& b1 : execute_all_branches(first, start)) {
    for (auto& b2 : execute_all_branches(second, b1.state, b1.outcomes, b1.probability)) {
      const auto fixed = execute_all_branches(fix, b2.state, b2.outcomes).front().state;
      const auto p = read_chain(b2.outcomes, n, "");
      const auto p_prime = read_chain(b2.outcomes, n, "'");
      run.branches.push_back({p, p_prime, prefix_xor(p), prefix_xor(p_prime), b2.probability, b1.state,
                              std::move(b2.state), fixed});
    }
  }
  return run;
}

HybridGhzRun hybrid_swap_two() { return hybrid_ghz(2); }

// ---------------------------------------------------------------------------
// Mode-ancilla CZ

Circuit new_cz_circuit(const ElectronArray& array) {
  if (array.size() != 2) throw std::invalid_argument("the spin CZ acts on two electrons");
  const auto &s1 = array.spin(1), &k1 = array.mode(1), &s2 = array.spin(2), &k2 = array.mode(2);
  Circuit c(array.qubits());
  c.add(Gate::h(k2));
  c.add(Gate::cnot(s1, k1));
  c.add(ParityMeasurement{k1, k2, "p1"});
  c.add(Gate::h(k2));
  c.add(Gate::cnot(s2, k2));
  c.add(ParityMeasurement{k1, k2, "p2"});
  c.add(Gate::h(k1));
  c.add(Gate::h(k2));
  c.add(ParityMeasurement{k1, k2, "p3"});
  return c;
}

Circuit new_cz_corrections(const ElectronArray& array) {
  Circuit fix(array.qubits());
  fix.allow_external_bits({"p1", "p2", "p3"});
  fix.add(Gate::z(array.spin(1)).when("1^p1^p2^p3"));
  fix.add(Gate::z(array.spin(2)).when("p1"));
  return fix;
}

Circuit NewCzRun::full_circuit() const {
  Circuit c = circuit;
  c.add(corrections);
  return c;
}

NewCzRun new_cz(const PureState& spins) {
  if (spins.num_qubits() != 2) throw std::invalid_argument("new_cz expects a two-spin state");
  ElectronArray array(2);
  const auto sreg = QubitRegister::of(array.spin_labels());
  const auto kreg = QubitRegister::of(array.mode_labels());
  return new_cz_on(permuted(tensor(relabeled(spins, sreg), basis_state(kreg, Index{0})), array.qubits()));
}

NewCzRun new_cz_on(const PureState& full) {
  ElectronArray array(2);
  if (full.qubits().labels() != array.qubits().labels()) {
    throw std::invalid_argument("new_cz expects the register s1 k1 s2 k2");
  }
  if (std::abs(zero_weight(full, array.mode_labels()) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("new_cz needs the mode qubits in |00>");
  }
  NewCzRun run{array, new_cz_circuit(array), new_cz_corrections(array), full, {}};
  for (auto& b : execute_all_branches(run.circuit, full)) {
    auto corrected = execute_all_branches(run.corrections, b.state, b.outcomes).front().state;
    auto [spins, modes] = factorize(b.state, array.mode_labels());
    auto corrected_spins = factorize(corrected, array.mode_labels()).first;
    run.branches.push_back({b.outcomes.at("p1"), b.outcomes.at("p2"), b.outcomes.at("p3"), b.probability,
                            std::move(b.state), std::move(spins), std::move(modes), std::move(corrected_spins),
                            std::move(corrected)});
  }
  return run;
}

Circuit reset_modes_circuit(const ElectronArray& array) {
  Circuit c(array.qubits());
  c.allow_external_bits({"p3"});
  c.add(ZMeasurement{array.mode(1), "r"});
  c.add(Gate::x(array.mode(1)).when("r"));
  c.add(Gate::x(array.mode(2)).when("p3^r"));
  return c;
}

std::vector<ResetBranch> reset_modes_after_cz(const PureState& state, int p3) {
  if (p3 != 0 && p3 != 1) throw std::invalid_argument("p3 must be 0 or 1");
  ElectronArray array(2);
  const auto modes = factorize(state, array.mode_labels()).second;
  const auto kreg = QubitRegister::of(array.mode_labels());
  const double in_family = std::max(fidelity_up_to_global_phase(modes, bell_state(p3, 0, kreg)),
                                    fidelity_up_to_global_phase(modes, bell_state(p3, 1, kreg)));
  if (in_family < 1.0 - 1e-9) throw std::invalid_argument("modes are not in a Bell state with parity p3");

  std::vector<ResetBranch> out;
  for (auto& b : execute_all_branches(reset_modes_circuit(array), state, {{"p3", p3}})) {
    out.push_back({b.outcomes.at("r"), b.probability, std::move(b.state)});
  }
  return out;
}

}  // namespace paritynet
