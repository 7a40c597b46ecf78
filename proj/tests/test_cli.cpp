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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "paritynet/json_io.hpp"
#include "paritynet/protocols.hpp"

namespace paritynet {
namespace {

using io::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

TEST(Round12, TwelveSignificantDigits) {
  EXPECT_EQ(io::round12(0.70710678118654752), 0.707106781187);
  EXPECT_EQ(io::round12(-0.0), 0.0);
  EXPECT_FALSE(std::signbit(io::round12(-1e-300 * 1e-300)));
  EXPECT_THROW(io::round12(std::nan("")), std::invalid_argument);
}

TEST(JsonIo, StateRoundTrip) {
  std::mt19937_64 rng(4);
  const QubitRegister reg({{"s1", QubitRole::spin, 1}, {"k1", QubitRole::mode, 1}, {"anc", QubitRole::spin, {}, true}});
  const auto psi = random_state(reg, rng);
  const auto back = io::state_from_json(json::parse(io::to_json(psi).dump()));
  EXPECT_EQ(back.qubits(), reg);
  EXPECT_LT(max_amplitude_deviation(back, psi), 1e-11);
}

TEST(JsonIo, StateWithoutRegisterAndBadInput) {
  const auto s = io::state_from_json(json::parse(R"({"amplitudes": [0.6, [0, 0.8], 0, 0]})"));
  EXPECT_EQ(s.qubits().labels(), (std::vector<std::string>{"q0", "q1"}));
  EXPECT_NEAR(s.amplitude(1).imag(), 0.8, 1e-15);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"amplitudes": [1, 1]})")), std::invalid_argument);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"amplitudes": [1, 0, 0]})")), std::invalid_argument);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"amplitudes": []})")), std::invalid_argument);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"amps": [1]})")), json::exception);
}

TEST(JsonIo, CircuitRoundTrip) {
  auto c = cz_via_parity(plus_state(QubitRegister::of({"q1", "q2"}))).full_circuit();
  c.add(Gate::phase_rotation("q1", 0.25)).add(Gate::cnot("q2", "q1").when("p1 & a"));
  std::mt19937_64 rng(1);
  c.add(Gate::controlled_u("q1", "q2", random_unitary(rng))).add(Gate::cz("q1", "q2"));
  const auto j = io::to_json(c);
  const auto back = io::circuit_from_json(json::parse(j.dump()));
  EXPECT_EQ(io::to_json(back), j);
  EXPECT_EQ(back.qubits(), c.qubits());
  EXPECT_EQ(back.steps().size(), c.steps().size());
}

TEST(JsonIo, CircuitErrors) {
  EXPECT_THROW(io::circuit_from_json(json::parse(R"({"register": ["a"], "steps": [{"op": "T", "q": "a"}]})")),
               std::invalid_argument);
  EXPECT_THROW(io::circuit_from_json(json::parse(R"({"register": ["a"], "steps": [{"op": "H", "q": "b"}]})")),
               std::invalid_argument);
  EXPECT_THROW(io::circuit_from_json(json::parse(R"({"register": ["a"], "steps": [{"op": "H"}]})")), json::exception);
}

TEST(JsonIo, GraphRoundTrip) {
  const Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(io::to_json(g).dump(), R"({"edges":[[0,1],[2,3]],"n":4})");
  EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 0]]})")), std::invalid_argument);
}

TEST(Cli, TeleportJson) {
  const auto r = cli({"run", "teleport", "--branches", "all", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto arr = json::parse(r.out);
  ASSERT_EQ(arr.size(), 4u);
  for (const auto& b : arr) {
    EXPECT_EQ(b.at("probability").get<double>(), 0.25);
    EXPECT_EQ(b.at("corrected_fidelity").get<double>(), 1.0);
    EXPECT_TRUE(b.at("outcomes").contains("p1"));
    EXPECT_EQ(b.at("state").at("amplitudes").size(), 2u);
  }
}

TEST(Cli, VerifyIdentities) {
  const auto r = cli({"verify-identities"});
  EXPECT_EQ(r.code, 0) << r.out;
  std::size_t passes = 0;
  for (auto pos = r.out.find("PASS"); pos != std::string::npos; pos = r.out.find("PASS", pos + 1)) ++passes;
  EXPECT_EQ(passes, 6u);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CountResources) {
  const auto r = cli({"count-resources", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Hadamards                         3           11"), std::string::npos) << r.out;
  const auto j = json::parse(cli({"count-resources", "--n", "3", "--json"}).out);
  EXPECT_EQ(j.at("cnot_based").at("hadamards"), 11);
  EXPECT_EQ(j.at("native").at("p_gates"), 2);
  EXPECT_EQ(j.at("walked_native"), j.at("native"));
}

TEST(Cli, EveryProtocolSucceeds) {
  for (const std::string p : {"bell", "analyzer", "teleport", "ghz", "fuse", "hybrid-ghz", "cz", "new-cz"}) {
    const auto r = cli({"run", p});
    EXPECT_EQ(r.code, 0) << p << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("OK:"), std::string::npos) << p;
  }
}

TEST(Cli, GraphFusionFromFile) {
  const auto path = temp_file("graph.json", R"({"n": 4, "edges": [[0, 1], [2, 3]]})");
  const auto r = cli({"run", "fuse", "--graph", path, "--q1", "1", "--q2", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& b : json::parse(r.out)) {
    EXPECT_TRUE(b.at("stabilizer_check").get<bool>());
    EXPECT_EQ(b.at("predicted_graph").at("edges").size(), 3u);
  }
  EXPECT_EQ(cli({"run", "fuse", "--graph", path, "--q1", "0", "--q2", "1"}).code, 2);
  EXPECT_EQ(cli({"run", "fuse", "--graph", path}).code, 2);
}

TEST(Cli, SampleIsSeededAndByteDeterministic) {
  const std::vector<std::string> args{"run", "hybrid-ghz", "--n", "4", "--branches", "sample", "--seed", "11", "--json"};
  const auto a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).size(), 1u);
  std::set<std::string> seen;
  for (int seed = 0; seed < 20; ++seed) {
    seen.insert(cli({"run", "ghz", "--n", "4", "--branches", "sample", "--seed", std::to_string(seed)}).out);
  }
  EXPECT_GT(seen.size(), 1u);
  EXPECT_EQ(cli({"run", "teleport", "--json"}).out, cli({"--json", "run", "teleport"}).out);
}

TEST(Cli, EmittedStateFeedsBackAsInput) {
  const std::string in = R"({"register": ["q1", "q2"], "amplitudes": [[0.5, 0], [0, 0.5], [0.5, 0], [-0.5, 0]]})";
  const auto first = json::parse(cli({"run", "cz", "--input-state", in, "--json"}).out);
  const auto state = first.at(0).at("state").dump();
  const auto second = cli({"run", "cz", "--input-state", state, "--json"});
  ASSERT_EQ(second.code, 0) << second.err;
  // CZ twice: the second output is the original input up to phase.
  const auto out = io::state_from_json(json::parse(second.out).at(0).at("state"));
  EXPECT_NEAR(fidelity_up_to_global_phase(out, io::state_from_json(json::parse(in))), 1.0, 1e-9);
  const auto path = temp_file("state.json", state);
  EXPECT_EQ(cli({"run", "cz", "--input-state", path}).code, 0);
}

TEST(Cli, ExecCircuitFile) {
  const auto path = temp_file("bell.json", R"({"register": ["a", "b"], "steps": [
      {"op": "H", "q": "a"}, {"op": "H", "q": "b"}, {"op": "P", "q1": "a", "q2": "b", "out": "p"},
      {"op": "X", "q": "b", "if": "p"}]})");
  const auto r = cli({"exec", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto arr = json::parse(r.out);
  ASSERT_EQ(arr.size(), 2u);
  for (const auto& b : arr) {
    const auto s = io::state_from_json(b.at("state"));
    EXPECT_NEAR(fidelity_up_to_global_phase(s, bell_state(0, 0, s.qubits())), 1.0, 1e-12);
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  const auto none = cli({});
  EXPECT_EQ(none.code, 2);
  EXPECT_FALSE(none.err.empty());
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"run", "nope"}).code, 2);
  EXPECT_EQ(cli({"run", "ghz", "--n", "1"}).code, 2);
  EXPECT_EQ(cli({"run", "bell", "--x", "2"}).code, 2);
  EXPECT_EQ(cli({"run", "teleport", "--branches", "some"}).code, 2);
  EXPECT_EQ(cli({"run", "teleport", "--input-state", "{not json"}).code, 2);
  EXPECT_EQ(cli({"run", "teleport", "--input-state", R"({"amplitudes": [1, 0, 0, 0]})"}).code, 2);
  EXPECT_EQ(cli({"run", "analyzer", "--variant", "three"}).code, 2);
  EXPECT_EQ(cli({"count-resources", "--n", "1"}).code, 2);
  EXPECT_EQ(cli({"exec", "/nonexistent/circuit.json"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, VerificationFailureExitsOne) {
  // A negative tolerance can never be met.
  EXPECT_EQ(cli({"verify-identities", "--tolerance", "-1"}).code, 1);
}

}  // namespace
}  // namespace paritynet
