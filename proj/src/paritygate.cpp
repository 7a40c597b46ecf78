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

#include "paritynet/paritygate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paritynet {

QubitRegister ChannelDescription::main_register() const {
  std::vector<Qubit> main;
  for (const auto& q : circuit.qubits()) {
    if (std::find(ancillae.begin(), ancillae.end(), q.label) == ancillae.end()) main.push_back(q);
  }
  return QubitRegister(std::move(main));
}

namespace {

void check_relabel(const ChannelDescription& c) {
  std::set<std::string> targets;
  for (const auto& name : c.circuit.bound_outcomes()) {
    auto it = c.relabel.find(name);
    const std::string& target = it == c.relabel.end() ? name : it->second.canonical;
    if (!targets.insert(target).second) {
      throw std::invalid_argument("outcome relabeling is not a bijection ('" + target + "')");
    }
  }
  for (const auto& [name, alias] : c.relabel) {
    if (!c.circuit.bound_outcomes().count(name)) {
      throw std::invalid_argument("relabel refers to unbound outcome '" + name + "'");
    }
  }
}

std::string describe(const Outcomes& o) {
  std::ostringstream s;
  s << "{";
  bool first = true;
  for (const auto& [k, v] : o) {
    s << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  s << "}";
  return s.str();
}

}  // namespace

std::vector<BranchResult> run_channel(const ChannelDescription& channel, const PureState& input) {
  const auto main = channel.main_register();
  if (input.qubits().labels() != main.labels()) {
    throw std::invalid_argument("input does not live on the channel's main register");
  }
  PureState embedded = input;
  if (!channel.ancillae.empty()) {
    std::vector<Qubit> anc;
    for (const auto& a : channel.ancillae) anc.push_back(channel.circuit.qubits()[channel.circuit.qubits().index_of(a)]);
    const QubitRegister anc_reg(anc);
    embedded = permuted(tensor(input, basis_state(anc_reg, Index{0})), channel.circuit.qubits());
  }

  std::vector<BranchResult> out;
  for (auto& b : execute_all_branches(channel.circuit, embedded)) {
    Outcomes renamed;
    for (const auto& [name, bit] : b.outcomes) {
      auto it = channel.relabel.find(name);
      if (it == channel.relabel.end()) {
        renamed[name] = bit;
      } else {
        renamed[it->second.canonical] = bit ^ (it->second.complement ? 1 : 0);
      }
    }
    PureState state = b.state;
    if (!channel.ancillae.empty()) state = permuted(factorize(b.state, channel.ancillae).first, main);
    out.push_back({std::move(renamed), b.probability, std::move(state)});
  }
  return out;
}

double channel_deviation(const ChannelDescription& a, const ChannelDescription& b,
                         const PureState& input, std::string* why) {
  const auto ra = run_channel(a, input);
  const auto rb = run_channel(b, relabeled(input, b.main_register()));

  std::map<Outcomes, const BranchResult*> ma, mb;
  for (const auto& r : ra) ma[r.outcomes] = &r;
  for (const auto& r : rb) mb[r.outcomes] = &r;
  std::set<Outcomes> keys;
  for (const auto& [k, _] : ma) keys.insert(k);
  for (const auto& [k, _] : mb) keys.insert(k);

  double worst = 0.0;
  for (const auto& k : keys) {
    auto ia = ma.find(k), ib = mb.find(k);
    double dev = 0.0;
    std::string what;
    if (ia == ma.end() || ib == mb.end()) {
      dev = (ia == ma.end() ? ib : ia)->second->probability;
      what = "branch " + describe(k) + " occurs on one side only";
    } else {
      const auto& x = *ia->second;
      const auto& y = *ib->second;
      const double dp = std::abs(x.probability - y.probability);
      const double df = 1.0 - fidelity_up_to_global_phase(x.state, relabeled(y.state, x.state.qubits()));
      dev = std::max(dp, df);
      what = "branch " + describe(k) + ": probability differs by " + std::to_string(dp) +
             ", infidelity " + std::to_string(df);
    }
    if (dev > worst) {
      worst = dev;
      if (why) *why = what;
    }
  }
  return worst;
}

ChannelComparison channels_equal(const ChannelDescription& a, const ChannelDescription& b, int trials,
                                 std::uint64_t seed, double tolerance) {
  check_relabel(a);
  check_relabel(b);
  const auto main = a.main_register();
  if (main.size() != b.main_register().size()) throw std::invalid_argument("channel registers differ in size");

  std::vector<PureState> inputs;
  for (Index i = 0; i < (Index{1} << main.size()); ++i) inputs.push_back(basis_state(main, i));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) inputs.push_back(random_state(main, rng));

  ChannelComparison result;
  for (const auto& in : inputs) {
    std::string why;
    const double dev = channel_deviation(a, b, in, &why);
    ++result.inputs_checked;
    result.max_deviation = std::max(result.max_deviation, dev);
    if (dev > tolerance) {
      result.equal = false;
      result.counterexample = "input #" + std::to_string(result.inputs_checked - 1) + ": " + why;
      break;
    }
  }
  return result;
}

Eigen::Matrix2cd IdentityOptions::default_unitary() {
  // A real rotation followed by a phase on |1>.
  const double c = std::cos(0.9), s = std::sin(0.9);
  const Complex e = std::polar(1.0, 0.3);
  Eigen::Matrix2cd u;
  u << c, -s, e * s, e * c;
  return u;
}

Circuit rename_qubits(const Circuit& circuit, const std::map<std::string, std::string>& renames) {
  auto r = [&](const std::string& l) {
    auto it = renames.find(l);
    return it == renames.end() ? l : it->second;
  };
  Circuit out(circuit.qubits());
  for (const auto& step : circuit.steps()) {
    if (const auto* g = std::get_if<Gate>(&step)) {
      Gate ng = *g;
      for (auto& q : ng.qubits) q = r(q);
      out.add(ng);
    } else if (const auto* pm = std::get_if<ParityMeasurement>(&step)) {
      out.add(ParityMeasurement{r(pm->q1), r(pm->q2), pm->outcome});
    } else {
      const auto& zm = std::get<ZMeasurement>(step);
      out.add(ZMeasurement{r(zm.qubit), zm.outcome});
    }
  }
  return out;
}

std::vector<GateIdentity> builtin_identity_suite(const IdentityOptions& opt) {
  const auto two = QubitRegister::of({"q1", "q2"});
  const auto three = QubitRegister::of({"q1", "q2", "q3"});
  auto channel = [](const QubitRegister& reg, std::vector<Step> steps) {
    ChannelDescription c{Circuit(reg), {}, {}};
    for (auto& s : steps) c.circuit.add(std::move(s));
    return c;
  };
  const ParityMeasurement p12{"q1", "q2", "p"};

  std::vector<GateIdentity> suite;

  suite.push_back({"(a) z-rotation", "P commutes with exp(i phi Z) on either line",
                   channel(two, {Gate::phase_rotation("q1", opt.angle), Gate::phase_rotation("q2", opt.second_angle), p12}),
                   channel(two, {p12, Gate::phase_rotation("q1", opt.angle), Gate::phase_rotation("q2", opt.second_angle)})});

  suite.push_back({"(b) global flip", "P commutes with X (x) X and keeps p",
                   channel(two, {Gate::x("q1"), Gate::x("q2"), p12}),
                   channel(two, {p12, Gate::x("q1"), Gate::x("q2")})});

  {
    auto rhs = channel(two, {ParityMeasurement{"q1", "q2", "p_prime"}, Gate::x("q1")});
    rhs.relabel["p_prime"] = {"p", true};
    suite.push_back({"(c) single flip", "moving X through P complements p",
                     channel(two, {Gate::x("q1"), p12}), std::move(rhs)});
  }

  suite.push_back({"(d) controlled-U", "P commutes with a controlled-U whose control is a parity line",
                   channel(three, {Gate::controlled_u("q1", "q3", opt.unitary), p12}),
                   channel(three, {p12, Gate::controlled_u("q1", "q3", opt.unitary)})});

  {
    const ParityMeasurement first{"q1", "q2", "p12"}, second{"q2", "q3", "p23"};
    suite.push_back({"(e) parity commute", "P on (1,2) and P on (2,3) commute",
                     channel(three, {first, second}), channel(three, {second, first})});
  }

  {
    const QubitRegister with_anc({Qubit{"q1"}, Qubit{"q2"}, Qubit{"anc", QubitRole::spin, std::nullopt, true}});
    auto rhs = channel(with_anc, {Gate::cnot("q1", "anc"), Gate::cnot("q2", "anc"), ZMeasurement{"anc", "p"}});
    rhs.ancillae = {"anc"};
    suite.push_back({"(f) ancilla model", "P equals two CNOTs into a |0> ancilla and a Z readout",
                     channel(two, {p12}), std::move(rhs)});
  }

  if (opt.swap_lines) {
    const std::map<std::string, std::string> swap{{"q1", "q2"}, {"q2", "q1"}};
    for (auto& id : suite) {
      id.lhs.circuit = rename_qubits(id.lhs.circuit, swap);
      id.rhs.circuit = rename_qubits(id.rhs.circuit, swap);
      id.name += " [swapped]";
    }
  }
  return suite;
}

}  // namespace paritynet
