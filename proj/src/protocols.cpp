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

#include "paritynet/protocols.hpp"

#include <algorithm>
#include <stdexcept>

namespace paritynet {

Circuit ProtocolRun::full_circuit() const {
  Circuit full = circuit;
  full.add(corrections);
  return full;
}

double ProtocolRun::min_target_fidelity() const {
  if (!target) return 1.0;
  double worst = 1.0;
  for (const auto& b : branches) worst = std::min(worst, fidelity_up_to_global_phase(b.corrected, *target));
  return worst;
}

double ProtocolRun::min_pairwise_fidelity() const {
  double worst = 1.0;
  for (std::size_t a = 0; a < branches.size(); ++a) {
    for (std::size_t b = a + 1; b < branches.size(); ++b) {
      worst = std::min(worst, fidelity_up_to_global_phase(branches[a].corrected, branches[b].corrected));
    }
  }
  return worst;
}

double ProtocolRun::total_probability() const {
  double t = 0.0;
  for (const auto& b : branches) t += b.probability;
  return t;
}

ProtocolRun run_protocol(std::string name, Circuit circuit, Circuit corrections, PureState input,
                         std::vector<std::string> outputs, std::optional<PureState> target) {
  if (outputs.empty()) outputs = circuit.qubits().labels();
  corrections.allow_external_bits(circuit.bound_outcomes());
  ProtocolRun run{std::move(name), std::move(circuit), std::move(corrections), std::move(outputs),
                  std::move(input), std::move(target), {}};
  const bool whole = run.outputs == run.circuit.qubits().labels();
  for (auto& b : execute_all_branches(run.circuit, run.input)) {
    auto fixed = execute_all_branches(run.corrections, b.state, b.outcomes);
    if (fixed.size() != 1) throw std::logic_error("corrections must not measure");
    PureState out = whole ? fixed.front().state : factorize(fixed.front().state, run.outputs).second;
    run.branches.push_back({std::move(b.outcomes), b.probability, std::move(b.state), std::move(out)});
  }
  return run;
}

namespace {

Circuit with_steps(const QubitRegister& reg, std::initializer_list<Step> steps) {
  Circuit c(reg);
  for (const auto& s : steps) c.add(s);
  return c;
}

void require_bit(int b, const char* what) {
  if (b != 0 && b != 1) throw std::invalid_argument(std::string(what) + " must be 0 or 1");
}

}  // namespace

ProtocolRun prepare_bell(int x, int y) {
  require_bit(x, "x");
  require_bit(y, "y");
  const auto reg = QubitRegister::of({"q1", "q2"});
  auto circuit = with_steps(reg, {Gate::h("q1"), Gate::h("q2"), ParityMeasurement{"q1", "q2", "p"}});
  Circuit fix(reg);
  fix.allow_external_bits({"p"});
  fix.add(Gate::x("q2").when("p"));
  return run_protocol("bell", std::move(circuit), std::move(fix), basis_state(reg, BinaryVector{x, y}), {},
                      bell_state(0, x ^ y, reg));
}

Circuit bell_analyzer_circuit(AnalyzerVariant variant, const QubitRegister& reg) {
  if (reg.size() != 2) throw std::invalid_argument("the Bell analyzer acts on two qubits");
  const auto a = reg[0].label, b = reg[1].label;
  auto c = with_steps(reg, {ParityMeasurement{a, b, "i"}, Gate::h(a), Gate::h(b), ParityMeasurement{a, b, "j"}});
  if (variant == AnalyzerVariant::four_hadamard) {
    c.add(Gate::h(a));
    c.add(Gate::h(b));
  }
  return c;
}

std::vector<AnalyzerOutcome> bell_analyzer(const PureState& state, AnalyzerVariant variant) {
  std::vector<AnalyzerOutcome> out;
  for (auto& b : execute_all_branches(bell_analyzer_circuit(variant, state.qubits()), state)) {
    out.push_back({b.outcomes.at("i"), b.outcomes.at("j"), b.probability, std::move(b.state)});
  }
  return out;
}

ProtocolRun teleport_run(const PureState& psi) {
  if (psi.num_qubits() != 1) throw std::invalid_argument("teleport expects a single-qubit state");
  const auto reg = QubitRegister::of({"a1", "a2", "b"});
  const auto input = tensor(relabeled(psi, QubitRegister::of({"a1"})), bell_state(0, 0, QubitRegister::of({"a2", "b"})));
  auto circuit = with_steps(reg, {ParityMeasurement{"a1", "a2", "p1"}, Gate::h("a1"), Gate::h("a2"),
                                  ParityMeasurement{"a1", "a2", "p2"}});
  Circuit fix(reg);
  fix.allow_external_bits({"p1", "p2"});
  fix.add(Gate::x("b").when("p1"));
  fix.add(Gate::z("b").when("p2"));
  return run_protocol("teleport", std::move(circuit), std::move(fix), input, {"b"},
                      relabeled(psi, QubitRegister::of({"b"})));
}

std::vector<TeleportBranch> teleport(const PureState& psi) {
  const auto run = teleport_run(psi);
  std::vector<TeleportBranch> out;
  for (const auto& b : run.branches) {
    auto [alice, bob] = factorize(b.raw, {"b"});
    out.push_back({b.outcomes.at("p1"), b.outcomes.at("p2"), b.probability, b.raw, std::move(alice),
                   std::move(bob), b.corrected});
  }
  return out;
}

BinaryVector prefix_xor(const BinaryVector& p) {
  BinaryVector j(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) j.set(i, j[i - 1] ^ p[i]);
  return j;
}

BinaryVector chain_parities(const Outcomes& outcomes, std::size_t n, const std::string& prefix) {
  BinaryVector p(n);
  for (std::size_t i = 2; i <= n; ++i) p.set(i - 1, outcomes.at(prefix + std::to_string(i)));
  return p;
}

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(stem + std::to_string(i));
  return labels;
}

// X on qubit i iff p_2 ^ ... ^ p_i, i.e. the correction X(j).
std::string prefix_condition(const std::string& prefix, std::size_t i) {
  std::string expr;
  for (std::size_t l = 2; l <= i; ++l) expr += (expr.empty() ? "" : "^") + prefix + std::to_string(l);
  return expr;
}

}  // namespace

ProtocolRun ghz_chain(std::size_t n) {
  if (n < 2 || n > kMaxQubits) throw std::invalid_argument("GHZ chain needs 2 <= n <= 24");
  const auto labels = numbered("q", n);
  const auto reg = QubitRegister::of(labels);
  Circuit circuit(reg);
  for (const auto& l : labels) circuit.add(Gate::h(l));
  for (std::size_t i = 2; i <= n; ++i) {
    circuit.add(ParityMeasurement{labels[i - 2], labels[i - 1], "p" + std::to_string(i)});
  }
  Circuit fix(reg);
  fix.allow_external_bits(circuit.bound_outcomes());
  for (std::size_t i = 2; i <= n; ++i) fix.add(Gate::x(labels[i - 1]).when(prefix_condition("p", i)));
  return run_protocol("ghz", std::move(circuit), std::move(fix), basis_state(reg, Index{0}), {}, ghz_state(reg));
}

ProtocolRun ghz_fusion(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2 || n + m > kMaxQubits) throw std::invalid_argument("GHZ fusion needs n, m >= 2 and n + m <= 24");
  const auto left = QubitRegister::of(numbered("a", n));
  const auto right = QubitRegister::of(numbered("b", m));
  const auto reg = left + right;
  Circuit circuit(reg);
  circuit.add(ParityMeasurement{left[n - 1].label, right[0].label, "p"});
  Circuit fix(reg);
  fix.allow_external_bits({"p"});
  for (const auto& q : right) fix.add(Gate::x(q.label).when("p"));
  return run_protocol("fuse", std::move(circuit), std::move(fix), tensor(ghz_state(left), ghz_state(right)), {},
                      ghz_state(reg));
}

PureState apply_cz(const PureState& state) {
  if (state.num_qubits() != 2) throw std::invalid_argument("apply_cz expects two qubits");
  PureState out = state;
  out.mutable_amplitudes()[3] *= -1.0;
  return out;
}

ProtocolRun cz_via_parity(const PureState& input) {
  if (input.num_qubits() != 2) throw std::invalid_argument("cz_via_parity expects a two-qubit input");
  const auto& q1 = input.qubits()[0];
  const auto& q2 = input.qubits()[1];
  const QubitRegister reg({q1, Qubit{"anc", q1.role, std::nullopt, true}, q2});
  const auto anc = QubitRegister({reg[1]});
  const auto embedded = permuted(tensor(input, basis_state(anc, Index{0})), reg);

  auto circuit = with_steps(reg, {Gate::h("anc"), ParityMeasurement{q1.label, "anc", "p1"}, Gate::h("anc"),
                                  ParityMeasurement{"anc", q2.label, "p2"}, Gate::h("anc"), ZMeasurement{"anc", "a"}});
  Circuit fix(reg);
  fix.allow_external_bits({"p1", "p2", "a"});
  fix.add(Gate::z(q1.label).when("p2"));
  fix.add(Gate::z(q2.label).when("p1^a"));
  return run_protocol("cz", std::move(circuit), std::move(fix), embedded, {q1.label, q2.label}, apply_cz(input));
}

}  // namespace paritynet
