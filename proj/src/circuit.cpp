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

#include "paritynet/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace paritynet {

// ---------------------------------------------------------------------------
// Condition

class ConditionParser {
 public:
  using Poly = std::set<Condition::Monomial>;

  explicit ConditionParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  static Poly xor_poly(const Poly& a, const Poly& b) {
    Poly out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.end()));
    return out;
  }

  static Poly and_poly(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& ma : a) {
      for (const auto& mb : b) {
        Condition::Monomial m = ma;
        m.insert(mb.begin(), mb.end());
        if (!out.erase(m)) out.insert(std::move(m));
      }
    }
    return out;
  }

  static Poly one() { return Poly{Condition::Monomial{}}; }

 private:
  Poly expr() {
    Poly p = term();
    while (accept('^')) p = xor_poly(p, term());
    return p;
  }

  Poly term() {
    Poly p = unary();
    while (accept('&')) p = and_poly(p, unary());
    return p;
  }

  Poly unary() {
    if (accept('!')) return xor_poly(one(), unary());
    return atom();
  }

  Poly atom() {
    skip_space();
    if (accept('(')) {
      Poly p = expr();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        fail("bad literal");
      }
      return c == '1' ? one() : Poly{};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\'')) {
        ++pos_;
      }
      return Poly{Condition::Monomial{std::string(text_.substr(start, pos_ - start))}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad condition '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Condition Condition::parse(std::string_view text) {
  Condition c;
  c.terms_ = ConditionParser(text).parse();
  c.unconditional_ = c.terms_ == ConditionParser::one();
  c.text_ = std::string(text);
  return c;
}

Condition Condition::variable(std::string name) { return parse(name); }

bool Condition::evaluate(const Outcomes& outcomes) const {
  if (unconditional_) return true;
  int value = 0;
  for (const auto& m : terms_) {
    int prod = 1;
    for (const auto& v : m) {
      auto it = outcomes.find(v);
      if (it == outcomes.end()) throw std::out_of_range("classical bit '" + v + "' is unassigned");
      prod &= it->second;
    }
    value ^= prod;
  }
  return value != 0;
}

std::set<std::string> Condition::variables() const {
  std::set<std::string> vars;
  for (const auto& m : terms_) vars.insert(m.begin(), m.end());
  return vars;
}

// ---------------------------------------------------------------------------
// Gate

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::PhaseRotation: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::ControlledU: return "CU";
  }
  return "?";
}

Gate Gate::h(std::string q) { return Gate{GateKind::H, {std::move(q)}}; }
Gate Gate::x(std::string q) { return Gate{GateKind::X, {std::move(q)}}; }
Gate Gate::z(std::string q) { return Gate{GateKind::Z, {std::move(q)}}; }

Gate Gate::phase_rotation(std::string q, double angle) {
  Gate g{GateKind::PhaseRotation, {std::move(q)}};
  g.angle = angle;
  return g;
}

Gate Gate::cnot(std::string control, std::string target) {
  return Gate{GateKind::CNOT, {std::move(control), std::move(target)}};
}

Gate Gate::cz(std::string a, std::string b) { return Gate{GateKind::CZ, {std::move(a), std::move(b)}}; }

Gate Gate::controlled_u(std::string control, std::string target, const Eigen::Matrix2cd& u) {
  if (!is_unitary(u)) throw std::invalid_argument("controlled-U matrix is not unitary");
  Gate g{GateKind::ControlledU, {std::move(control), std::move(target)}};
  g.unitary = u;
  return g;
}

Gate Gate::when(std::string_view expr) const { return when(Condition::parse(expr)); }

Gate Gate::when(Condition c) const {
  Gate g = *this;
  g.condition = std::move(c);
  return g;
}

// ---------------------------------------------------------------------------
// Circuit

namespace {

bool is_two_qubit(GateKind k) {
  return k == GateKind::CNOT || k == GateKind::CZ || k == GateKind::ControlledU;
}

}  // namespace

void Circuit::check_label(const std::string& label) const {
  if (!register_.contains(label)) throw std::invalid_argument("unknown qubit label '" + label + "'");
}

Circuit& Circuit::allow_external_bits(const std::set<std::string>& names) {
  for (const auto& n : names) {
    if (bound_.count(n)) throw std::invalid_argument("outcome '" + n + "' is already bound");
  }
  external_.insert(names.begin(), names.end());
  return *this;
}

Circuit& Circuit::add(Step step) {
  auto bind = [&](const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty outcome name");
    if (bound_.count(name) || external_.count(name)) {
      throw std::invalid_argument("outcome '" + name + "' is bound twice");
    }
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Gate>) {
          const std::size_t arity = is_two_qubit(s.kind) ? 2 : 1;
          if (s.qubits.size() != arity) throw std::invalid_argument("gate has the wrong number of qubits");
          for (const auto& q : s.qubits) check_label(q);
          if (arity == 2 && s.qubits[0] == s.qubits[1]) {
            throw std::invalid_argument("two-qubit gate on a single line");
          }
          if (s.kind == GateKind::ControlledU && !is_unitary(s.unitary)) {
            throw std::invalid_argument("controlled-U matrix is not unitary");
          }
          for (const auto& v : s.condition.variables()) {
            if (!bound_.count(v) && !external_.count(v)) {
              throw std::invalid_argument("condition uses '" + v + "' before it is measured");
            }
          }
        } else if constexpr (std::is_same_v<T, ParityMeasurement>) {
          check_label(s.q1);
          check_label(s.q2);
          if (s.q1 == s.q2) throw std::invalid_argument("parity measurement needs two distinct qubits");
          bind(s.outcome);
        } else {
          check_label(s.qubit);
          bind(s.outcome);
        }
      },
      step);
  if (auto* pm = std::get_if<ParityMeasurement>(&step)) bound_.insert(pm->outcome);
  if (auto* zm = std::get_if<ZMeasurement>(&step)) bound_.insert(zm->outcome);
  steps_.push_back(std::move(step));
  return *this;
}

Circuit& Circuit::add(const Circuit& tail) {
  if (tail.qubits().labels() != register_.labels()) {
    throw std::invalid_argument("cannot append a circuit over a different register");
  }
  for (const auto& s : tail.steps()) add(s);
  return *this;
}

std::size_t Circuit::measurement_count() const {
  return static_cast<std::size_t>(std::count_if(steps_.begin(), steps_.end(), [](const Step& s) {
    return !std::holds_alternative<Gate>(s);
  }));
}

// ---------------------------------------------------------------------------
// Execution

PureState apply_gate(const PureState& state, const Gate& gate, const Outcomes& classical) {
  const auto& reg = state.qubits();
  for (const auto& q : gate.qubits) reg.index_of(q);
  if (!gate.condition.evaluate(classical)) return state;

  PureState out = state;
  auto& amps = out.mutable_amplitudes();
  const Index t = reg.mask_of(gate.qubits.back());
  switch (gate.kind) {
    case GateKind::H: apply_one_qubit<Complex>(amps, gates::hadamard<Complex>(), t); break;
    case GateKind::X: apply_one_qubit<Complex>(amps, gates::pauli_x<Complex>(), t); break;
    case GateKind::Z: apply_one_qubit<Complex>(amps, gates::pauli_z<Complex>(), t); break;
    case GateKind::PhaseRotation:
      apply_one_qubit<Complex>(amps, gates::z_rotation<Complex>(gate.angle), t);
      break;
    case GateKind::CNOT:
      apply_one_qubit<Complex>(amps, gates::pauli_x<Complex>(), t, reg.mask_of(gate.qubits[0]));
      break;
    case GateKind::CZ: apply_cz<Complex>(amps, reg.mask_of(gate.qubits[0]), t); break;
    case GateKind::ControlledU:
      apply_one_qubit<Complex>(amps, Matrix2<Complex>(gate.unitary), t, reg.mask_of(gate.qubits[0]));
      break;
  }
  return out;
}

namespace {

std::vector<MeasurementBranch> project_both(const PureState& state, Index mask) {
  std::vector<MeasurementBranch> out;
  for (int value : {0, 1}) {
    Eigen::VectorXcd amps = state.amplitudes();
    const double p = project_parity<Complex>(amps, mask, value);
    if (p < kPruneThreshold) continue;
    out.push_back({value, p, PureState::normalized(state.qubits(), std::move(amps))});
  }
  return out;
}

}  // namespace

std::vector<MeasurementBranch> parity_measure(const PureState& state, std::string_view q1,
                                              std::string_view q2) {
  if (q1 == q2) throw std::invalid_argument("parity measurement needs two distinct qubits");
  const auto& reg = state.qubits();
  return project_both(state, reg.mask_of(q1) | reg.mask_of(q2));
}

std::vector<MeasurementBranch> z_measure(const PureState& state, std::string_view q) {
  return project_both(state, state.qubits().mask_of(q));
}

namespace {

void require_register(const Circuit& circuit, const PureState& input) {
  if (circuit.qubits().labels() != input.qubits().labels()) {
    throw std::invalid_argument("input register does not match the circuit register");
  }
}

std::vector<MeasurementBranch> measure_step(const PureState& state, const Step& step) {
  if (const auto* pm = std::get_if<ParityMeasurement>(&step)) return parity_measure(state, pm->q1, pm->q2);
  return z_measure(state, std::get<ZMeasurement>(step).qubit);
}

const std::string& outcome_name(const Step& step) {
  if (const auto* pm = std::get_if<ParityMeasurement>(&step)) return pm->outcome;
  return std::get<ZMeasurement>(step).outcome;
}

void expand(const Circuit& circuit, std::size_t pos, PureState state, Outcomes outcomes,
            double probability, std::vector<BranchResult>& leaves) {
  const auto& steps = circuit.steps();
  for (; pos < steps.size(); ++pos) {
    if (const auto* g = std::get_if<Gate>(&steps[pos])) {
      state = apply_gate(state, *g, outcomes);
      continue;
    }
    auto branches = measure_step(state, steps[pos]);
    for (auto& b : branches) {
      Outcomes next = outcomes;
      next[outcome_name(steps[pos])] = b.value;
      expand(circuit, pos + 1, std::move(b.state), std::move(next), probability * b.probability, leaves);
    }
    return;
  }
  leaves.push_back({std::move(outcomes), probability, std::move(state)});
}

}  // namespace

std::vector<BranchResult> execute_all_branches(const Circuit& circuit, const PureState& input,
                                               const Outcomes& prior, double prior_probability) {
  require_register(circuit, input);
  std::vector<BranchResult> leaves;
  expand(circuit, 0, input, prior, prior_probability, leaves);
  return leaves;
}

std::vector<BranchResult> continue_branches(const Circuit& circuit,
                                            const std::vector<BranchResult>& branches) {
  std::vector<BranchResult> out;
  for (const auto& b : branches) {
    auto leaves = execute_all_branches(circuit, b.state, b.outcomes, b.probability);
    out.insert(out.end(), std::make_move_iterator(leaves.begin()), std::make_move_iterator(leaves.end()));
  }
  return out;
}

BranchResult execute_sample(const Circuit& circuit, const PureState& input, std::uint64_t seed) {
  require_register(circuit, input);
  std::mt19937_64 rng(seed);
  // 53 random mantissa bits; independent of the standard library's distributions.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  BranchResult result{{}, 1.0, input};
  for (const auto& step : circuit.steps()) {
    if (const auto* g = std::get_if<Gate>(&step)) {
      result.state = apply_gate(result.state, *g, result.outcomes);
      continue;
    }
    auto branches = measure_step(result.state, step);
    double total = 0.0;
    for (const auto& b : branches) total += b.probability;
    const double u = uniform() * total;
    std::size_t pick = branches.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      acc += branches[i].probability;
      if (u < acc) {
        pick = i;
        break;
      }
    }
    result.outcomes[outcome_name(step)] = branches[pick].value;
    result.probability *= branches[pick].probability;
    result.state = std::move(branches[pick].state);
  }
  return result;
}

}  // namespace paritynet
