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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "paritynet/graphstate.hpp"
#include "paritynet/hybrid.hpp"
#include "paritynet/json_io.hpp"
#include "paritynet/paritygate.hpp"
#include "paritynet/protocols.hpp"
#include "paritynet/resources.hpp"

namespace paritynet::cli {

namespace {

using io::json;

struct Options {
  std::uint64_t seed = 0;
  std::string branches = "all";
  bool json = false;
  double tolerance = 1e-9;

  std::string protocol;
  int n = -1;
  int m = -1;
  int x = 0;
  int y = 0;
  std::string input_state;
  std::string graph_file;
  int q1 = -1;
  int q2 = -1;
  std::string variant = "four";
  int trials = 50;
  std::string circuit_file;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", io::round12(v));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or a path to a file holding it.
json parse_json_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  const std::string body = first != std::string::npos && (text[first] == '{' || text[first] == '[') ? text : read_file(text);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

std::string describe(const Outcomes& o) {
  std::string s;
  for (const auto& [k, v] : o) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s.empty() ? "-" : s;
}

/// One reported branch; `extra` carries protocol-specific fields.
struct Row {
  Outcomes outcomes;
  double probability = 0.0;
  std::optional<double> fidelity;
  PureState state;
  json extra = json::object();
};

// Index of the branch with these outcomes, drawn by sampling `circuit`.
std::size_t sampled_index(const std::vector<Row>& rows, const Circuit& circuit, const PureState& input,
                          std::uint64_t seed) {
  const auto drawn = execute_sample(circuit, input, seed);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool match = true;
    for (const auto& [k, v] : drawn.outcomes) {
      auto it = rows[i].outcomes.find(k);
      if (it == rows[i].outcomes.end() || it->second != v) match = false;
    }
    if (match) return i;
  }
  throw std::logic_error("sampled branch not found among enumerated branches");
}

int emit(const Options& opt, std::vector<Row> rows, const Circuit& circuit, const PureState& input,
         std::ostream& out) {
  if (opt.branches == "sample") {
    const auto pick = sampled_index(rows, circuit, input, opt.seed);
    rows = {rows[pick]};
  }
  bool ok = true;
  for (const auto& r : rows) {
    if (r.fidelity && *r.fidelity < 1.0 - opt.tolerance) ok = false;
    if (r.extra.contains("stabilizer_check") && !r.extra["stabilizer_check"].get<bool>()) ok = false;
  }
  if (opt.json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = {{"outcomes", io::to_json(r.outcomes)}, {"probability", io::round12(r.probability)}};
      if (r.fidelity) o["corrected_fidelity"] = io::round12(*r.fidelity);
      for (const auto& [k, v] : r.extra.items()) o[k] = v;
      o["state"] = io::to_json(r.state);
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      out << "outcomes " << describe(r.outcomes) << "  probability " << num(r.probability);
      if (r.fidelity) out << "  corrected_fidelity " << num(*r.fidelity);
      for (const auto& [k, v] : r.extra.items()) out << "  " << k << " " << (v.is_string() ? v.get<std::string>() : v.is_number_float() ? num(v.get<double>()) : v.dump());
      out << "\n";
    }
    out << (ok ? "OK" : "FAILED") << ": " << rows.size() << " branch(es)\n";
  }
  return ok ? 0 : 1;
}

int emit_run(const Options& opt, const ProtocolRun& run, std::ostream& out) {
  std::vector<Row> rows;
  for (const auto& b : run.branches) {
    std::optional<double> f;
    if (run.target) f = fidelity_up_to_global_phase(b.corrected, *run.target);
    rows.push_back({b.outcomes, b.probability, f, b.corrected});
  }
  return emit(opt, std::move(rows), run.circuit, run.input, out);
}

PureState input_or(const Options& opt, std::size_t qubits, PureState fallback) {
  if (opt.input_state.empty()) return fallback;
  auto s = io::state_from_json(parse_json_arg(opt.input_state));
  if (s.num_qubits() != qubits) {
    throw UsageError("--input-state must hold " + std::to_string(qubits) + " qubit(s)");
  }
  return s;
}

int require(int value, int fallback) { return value < 0 ? fallback : value; }

int run_protocol_command(const Options& opt, std::ostream& out) {
  const auto& p = opt.protocol;
  const double s = 1.0 / std::sqrt(2.0);
  const auto plus_plus = plus_state(QubitRegister::of({"q1", "q2"}));

  if (p == "bell") return emit_run(opt, prepare_bell(opt.x, opt.y), out);
  if (p == "ghz") return emit_run(opt, ghz_chain(static_cast<std::size_t>(require(opt.n, 3))), out);
  if (p == "cz") return emit_run(opt, cz_via_parity(input_or(opt, 2, plus_plus)), out);

  if (p == "teleport") {
    Eigen::VectorXcd a(2);
    a << s, std::polar(s, std::numbers::pi / 3);
    const auto psi = input_or(opt, 1, PureState(QubitRegister::of({"psi"}), a));
    return emit_run(opt, teleport_run(psi), out);
  }

  if (p == "analyzer") {
    if (opt.variant != "two" && opt.variant != "four") throw UsageError("--variant must be two or four");
    const auto variant = opt.variant == "two" ? AnalyzerVariant::two_hadamard : AnalyzerVariant::four_hadamard;
    const auto input = input_or(opt, 2, bell_state(opt.x, opt.y, QubitRegister::of({"q1", "q2"})));
    std::vector<Row> rows;
    for (const auto& o : bell_analyzer(input, variant)) {
      rows.push_back({{{"i", o.i}, {"j", o.j}}, o.probability, std::nullopt, o.state,
                      {{"input_fidelity", io::round12(fidelity_up_to_global_phase(o.state, input))}}});
    }
    return emit(opt, std::move(rows), bell_analyzer_circuit(variant, input.qubits()), input, out);
  }

  if (p == "fuse") {
    if (opt.graph_file.empty()) {
      return emit_run(opt, ghz_fusion(static_cast<std::size_t>(require(opt.n, 2)), static_cast<std::size_t>(require(opt.m, 2))), out);
    }
    const auto graph = io::graph_from_json(parse_json_arg(opt.graph_file));
    if (opt.q1 < 0 || opt.q2 < 0) throw UsageError("graph fusion needs --q1 and --q2");
    std::vector<Row> rows;
    for (const auto& b : parity_fuse(graph, opt.q1, opt.q2)) {
      const bool stab = stabilizer_check(b.corrected, b.predicted);
      rows.push_back({{{"p", b.parity}}, b.probability,
                      fidelity_up_to_global_phase(b.corrected, graph_state(b.predicted)), b.corrected,
                      {{"correction", b.correction.to_string()}, {"predicted_graph", io::to_json(b.predicted)},
                       {"stabilizer_check", stab}}});
    }
    return emit(opt, std::move(rows), parity_fusion_circuit(graph, opt.q1, opt.q2), graph_state(graph), out);
  }

  if (p == "hybrid-ghz") {
    const auto run = hybrid_ghz(static_cast<std::size_t>(require(opt.n, 4)));
    std::vector<Row> rows;
    for (const auto& b : run.branches) {
      Outcomes o;
      for (std::size_t i = 2; i <= run.array.size(); ++i) {
        o["p" + std::to_string(i)] = b.p[i - 1];
        o["p" + std::to_string(i) + "'"] = b.p_prime[i - 1];
      }
      rows.push_back({o, b.probability, fidelity_up_to_global_phase(b.corrected, run.target), b.corrected,
                      {{"j", b.j.to_string()}, {"m", b.m.to_string()}}});
    }
    Circuit measured = run.first_stage;
    measured.add(run.second_stage);
    return emit(opt, std::move(rows), measured, basis_state(run.array.qubits(), Index{0}), out);
  }

  if (p == "new-cz") {
    const auto spins = input_or(opt, 2, plus_plus);
    const auto run = new_cz(spins);
    const auto expected = apply_cz(relabeled(spins, QubitRegister::of(run.array.spin_labels())));
    const auto kreg = QubitRegister::of(run.array.mode_labels());
    std::vector<Row> rows;
    for (const auto& b : run.branches) {
      rows.push_back({{{"p1", b.p1}, {"p2", b.p2}, {"p3", b.p3}}, b.probability,
                      fidelity_up_to_global_phase(b.corrected_spins, expected), b.corrected_spins,
                      {{"modes_fidelity", io::round12(fidelity_up_to_global_phase(b.modes, bell_state(b.p3, b.p2, kreg)))}}});
    }
    return emit(opt, std::move(rows), run.circuit, run.input, out);
  }

  throw UsageError("unknown protocol '" + p + "' (bell|analyzer|teleport|ghz|fuse|hybrid-ghz|cz|new-cz)");
}

int verify_identities(const Options& opt, std::ostream& out) {
  bool all = true;
  json arr = json::array();
  std::vector<std::string> lines;
  for (const auto& id : builtin_identity_suite()) {
    const auto r = channels_equal(id.lhs, id.rhs, opt.trials, opt.seed, opt.tolerance);
    all = all && r.equal;
    arr.push_back({{"name", id.name}, {"trials", opt.trials}, {"inputs", r.inputs_checked}, {"pass", r.equal},
                   {"max_deviation", io::round12(r.max_deviation)}});
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %6d  %-4s  %s", id.name.c_str(), opt.trials, r.equal ? "PASS" : "FAIL",
                  num(r.max_deviation).c_str());
    lines.push_back(line + (r.equal ? std::string() : "  " + r.counterexample));
  }
  if (opt.json) {
    out << arr.dump(2) << "\n";
  } else {
    char header[160];
    std::snprintf(header, sizeof header, "%-22s %6s  %-4s  %s", "identity", "trials", "result", "max_deviation");
    out << header << "\n";
    for (const auto& l : lines) out << l << "\n";
  }
  return all ? 0 : 1;
}

json tally_json(const ResourceTally& t) {
  return {{"ancillae", t.ancillae},
          {"ancilla_measurements", t.ancilla_measurements},
          {"p_gates", t.p_gates},
          {"hadamards", t.hadamards},
          {"post_processing", t.post_processing_ops}};
}

int count_resources(const Options& opt, std::ostream& out) {
  if (opt.n < 2) throw UsageError("count-resources needs --n >= 2");
  const auto n = static_cast<std::size_t>(opt.n);
  const auto native = count_ghz_resources(n, GhzScheme::native);
  const auto cnot = count_ghz_resources(n, GhzScheme::cnot_based);
  const auto walked = tally_circuit(ghz_chain(n).full_circuit());
  if (opt.json) {
    out << json{{"n", n}, {"native", tally_json(native)}, {"cnot_based", tally_json(cnot)},
                {"walked_native", tally_json(walked)}}
               .dump(2)
        << "\n";
  } else {
    auto row = [&](const char* name, std::size_t a, std::size_t b) {
      char line[128];
      std::snprintf(line, sizeof line, "%-26s %8zu %12zu", name, a, b);
      out << line << "\n";
    };
    char header[128];
    std::snprintf(header, sizeof header, "%-26s %8s %12s", ("n = " + std::to_string(n)).c_str(), "native", "CNOT-based");
    out << header << "\n";
    row("ancillae", native.ancillae, cnot.ancillae);
    row("measurements (ancillae)", native.ancilla_measurements, cnot.ancilla_measurements);
    row("P-gates", native.p_gates, cnot.p_gates);
    row("Hadamards", native.hadamards, cnot.hadamards);
    row("post-processing", native.post_processing_ops, cnot.post_processing_ops);
  }
  return walked == native ? 0 : 1;
}

int exec_circuit(const Options& opt, std::ostream& out) {
  const auto circuit = io::circuit_from_json(parse_json_arg(opt.circuit_file));
  PureState input = basis_state(circuit.qubits(), Index{0});
  if (!opt.input_state.empty()) {
    input = io::state_from_json(parse_json_arg(opt.input_state));
    if (input.qubits().labels() != circuit.qubits().labels()) {
      input = relabeled(input, circuit.qubits());
    }
  }
  std::vector<Row> rows;
  for (auto& b : execute_all_branches(circuit, input)) rows.push_back({b.outcomes, b.probability, std::nullopt, b.state});
  return emit(opt, std::move(rows), circuit, input, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Parity-gate network simulator", "paritynet"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "Seed for --branches sample and random trials");
  app.add_option("--branches", opt.branches, "Enumerate all branches or sample one")
      ->check(CLI::IsMember({"all", "sample"}));
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--tolerance", opt.tolerance, "Fidelity / deviation tolerance");

  auto* run_cmd = app.add_subcommand("run", "Run a protocol");
  run_cmd->add_option("protocol", opt.protocol, "bell|analyzer|teleport|ghz|fuse|hybrid-ghz|cz|new-cz")->required();
  run_cmd->add_option("--n", opt.n, "Size (ghz, hybrid-ghz, fuse)");
  run_cmd->add_option("--m", opt.m, "Second size (fuse)");
  run_cmd->add_option("--x", opt.x, "First input bit")->check(CLI::Range(0, 1));
  run_cmd->add_option("--y", opt.y, "Second input bit")->check(CLI::Range(0, 1));
  run_cmd->add_option("--input-state", opt.input_state, "State JSON (inline or file)");
  run_cmd->add_option("--graph", opt.graph_file, "Graph JSON file (fuse)");
  run_cmd->add_option("--q1", opt.q1, "First fusion vertex");
  run_cmd->add_option("--q2", opt.q2, "Second fusion vertex");
  run_cmd->add_option("--variant", opt.variant, "Analyzer variant: two|four");

  auto* verify_cmd = app.add_subcommand("verify-identities", "Check the parity-gate identities");
  verify_cmd->add_option("--trials", opt.trials, "Random inputs per identity")->check(CLI::NonNegativeNumber);

  auto* count_cmd = app.add_subcommand("count-resources", "n-GHZ resource table");
  count_cmd->add_option("--n", opt.n, "Number of qubits")->required();

  auto* exec_cmd = app.add_subcommand("exec", "Execute a circuit JSON file");
  exec_cmd->add_option("circuit", opt.circuit_file, "Circuit JSON (file or inline)")->required();
  exec_cmd->add_option("--input-state", opt.input_state, "State JSON (inline or file)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*run_cmd) return run_protocol_command(opt, out);
    if (*verify_cmd) return verify_identities(opt, out);
    if (*count_cmd) return count_resources(opt, out);
    if (*exec_cmd) return exec_circuit(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace paritynet::cli
