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

#include "paritynet/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace paritynet::io {

double round12(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value in output");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json to_json(const QubitRegister& reg) {
  json arr = json::array();
  for (const auto& q : reg) {
    json e = {{"label", q.label}, {"role", std::string(to_string(q.role))}};
    e["electron"] = q.electron ? json(*q.electron) : json(nullptr);
    if (q.ancilla) e["ancilla"] = true;
    arr.push_back(std::move(e));
  }
  return arr;
}

QubitRegister register_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("register must be a JSON array");
  std::vector<Qubit> qubits;
  for (const auto& e : j) {
    Qubit q;
    if (e.is_string()) {
      q.label = e.get<std::string>();
    } else {
      q.label = e.at("label").get<std::string>();
      if (e.contains("role")) q.role = qubit_role_from_string(e.at("role").get<std::string>());
      if (e.contains("electron") && !e.at("electron").is_null()) q.electron = e.at("electron").get<int>();
      q.ancilla = e.value("ancilla", false);
    }
    qubits.push_back(std::move(q));
  }
  return QubitRegister(std::move(qubits));
}

json to_json(const PureState& state) {
  json amps = json::array();
  for (const auto& a : state.amplitudes()) amps.push_back({round12(a.real()), round12(a.imag())});
  return {{"register", to_json(state.qubits())}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const json& j) {
  const auto& amps = j.at("amplitudes");
  if (!amps.is_array() || amps.empty()) throw std::invalid_argument("amplitudes must be a non-empty array");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto& a = amps[i];
    v[static_cast<Eigen::Index>(i)] = a.is_number() ? Complex(a.get<double>(), 0.0)
                                                    : Complex(a.at(0).get<double>(), a.at(1).get<double>());
  }
  QubitRegister reg;
  if (j.contains("register")) {
    reg = register_from_json(j.at("register"));
  } else {
    std::vector<std::string> labels;
    for (std::size_t n = 0; (std::size_t{1} << n) < amps.size(); ++n) labels.push_back("q" + std::to_string(n));
    reg = QubitRegister::of(labels);
  }
  if (static_cast<std::size_t>(v.size()) != (std::size_t{1} << reg.size())) {
    throw std::invalid_argument("amplitude count does not match the register");
  }
  if (std::abs(v.norm() - 1.0) > 1e-6) throw std::invalid_argument("input state is not normalized");
  return PureState::normalized(std::move(reg), std::move(v));
}

json to_json(const Outcomes& outcomes) {
  json o = json::object();
  for (const auto& [k, v] : outcomes) o[k] = v;
  return o;
}

json to_json(const Circuit& circuit) {
  json steps = json::array();
  for (const auto& step : circuit.steps()) {
    json s;
    if (const auto* g = std::get_if<Gate>(&step)) {
      s["op"] = std::string(to_string(g->kind));
      switch (g->kind) {
        case GateKind::CNOT:
        case GateKind::ControlledU:
          s["c"] = g->qubits[0];
          s["t"] = g->qubits[1];
          break;
        case GateKind::CZ:
          s["q1"] = g->qubits[0];
          s["q2"] = g->qubits[1];
          break;
        default:
          s["q"] = g->qubits[0];
      }
      if (g->kind == GateKind::PhaseRotation) s["phi"] = round12(g->angle);
      if (g->kind == GateKind::ControlledU) {
        json u = json::array();
        for (int r = 0; r < 2; ++r) {
          json row = json::array();
          for (int c = 0; c < 2; ++c) row.push_back({round12(g->unitary(r, c).real()), round12(g->unitary(r, c).imag())});
          u.push_back(std::move(row));
        }
        s["u"] = std::move(u);
      }
      if (g->conditional()) s["if"] = g->condition.text();
    } else if (const auto* pm = std::get_if<ParityMeasurement>(&step)) {
      s = {{"op", "P"}, {"q1", pm->q1}, {"q2", pm->q2}, {"out", pm->outcome}};
    } else {
      const auto& zm = std::get<ZMeasurement>(step);
      s = {{"op", "M"}, {"q", zm.qubit}, {"out", zm.outcome}};
    }
    steps.push_back(std::move(s));
  }
  return {{"register", to_json(circuit.qubits())}, {"steps", std::move(steps)}};
}

Circuit circuit_from_json(const json& j) {
  Circuit circuit(register_from_json(j.at("register")));
  for (const auto& s : j.at("steps")) {
    const auto op = s.at("op").get<std::string>();
    auto str = [&](const char* key) { return s.at(key).get<std::string>(); };
    if (op == "P") {
      circuit.add(ParityMeasurement{str("q1"), str("q2"), str("out")});
      continue;
    }
    if (op == "M") {
      circuit.add(ZMeasurement{str("q"), str("out")});
      continue;
    }
    Gate g;
    if (op == "H") {
      g = Gate::h(str("q"));
    } else if (op == "X") {
      g = Gate::x(str("q"));
    } else if (op == "Z") {
      g = Gate::z(str("q"));
    } else if (op == "RZ") {
      g = Gate::phase_rotation(str("q"), s.at("phi").get<double>());
    } else if (op == "CNOT") {
      g = Gate::cnot(str("c"), str("t"));
    } else if (op == "CZ") {
      g = Gate::cz(str("q1"), str("q2"));
    } else if (op == "CU") {
      Eigen::Matrix2cd u;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          const auto& e = s.at("u").at(r).at(c);
          u(r, c) = e.is_number() ? Complex(e.get<double>(), 0.0) : Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
      g = Gate::controlled_u(str("c"), str("t"), u);
    } else {
      throw std::invalid_argument("unknown circuit op '" + op + "'");
    }
    if (s.contains("if")) g = g.when(s.at("if").get<std::string>());
    circuit.add(std::move(g));
  }
  return circuit;
}

json to_json(const Graph& graph) {
  json edges = json::array();
  for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
  return {{"n", graph.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

}  // namespace paritynet::io
