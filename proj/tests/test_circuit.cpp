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

#include <random>

#include "oracle.hpp"
#include "paritynet/circuit.hpp"

namespace paritynet {
namespace {

TEST(Condition, EvaluatesXorAndNot) {
  const auto c = Condition::parse("p1 ^ (p2 & !p3)");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) {
        EXPECT_EQ(c.evaluate({{"p1", a}, {"p2", b}, {"p3", d}}), (a ^ (b & (1 - d))) == 1);
      }
  EXPECT_EQ(c.variables(), (std::set<std::string>{"p1", "p2", "p3"}));
  EXPECT_EQ(c.text(), "p1 ^ (p2 & !p3)");
}

TEST(Condition, EqualityIsAlgebraic) {
  EXPECT_EQ(Condition::parse("a^b"), Condition::parse("b ^ a"));
  EXPECT_EQ(Condition::parse("!(a^b)"), Condition::parse("1^a^b"));
  EXPECT_EQ(Condition::parse("a & (b ^ c)"), Condition::parse("a&b ^ a&c"));
  EXPECT_TRUE(Condition::parse("a ^ a ^ 1").unconditional());
  EXPECT_TRUE(Condition::parse("1").unconditional());
  EXPECT_EQ(Condition(), Condition::parse("1"));
  EXPECT_FALSE(Condition::parse("0").evaluate({}));
}

TEST(Condition, PrimedNamesAndErrors) {
  EXPECT_TRUE(Condition::parse("p2' ^ p3'").evaluate({{"p2'", 1}, {"p3'", 0}}));
  EXPECT_THROW(Condition::parse("a ^"), std::invalid_argument);
  EXPECT_THROW(Condition::parse("(a"), std::invalid_argument);
  EXPECT_THROW(Condition::parse("a b"), std::invalid_argument);
  EXPECT_THROW(Condition::parse("a | b"), std::invalid_argument);
  EXPECT_THROW(Condition::parse("12"), std::invalid_argument);
  EXPECT_THROW(Condition::parse("a").evaluate({}), std::out_of_range);
}

TEST(Circuit, ValidatesSteps) {
  Circuit c(QubitRegister::of({"a", "b"}));
  EXPECT_THROW(c.add(Gate::h("z")), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::cnot("a", "a")), std::invalid_argument);
  EXPECT_THROW(c.add(ParityMeasurement{"a", "a", "p"}), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::x("a").when("p")), std::invalid_argument);
  Eigen::Matrix2cd bad;
  bad << 1, 1, 0, 1;
  EXPECT_THROW(Gate::controlled_u("a", "b", bad), std::invalid_argument);
  c.add(ParityMeasurement{"a", "b", "p"});
  EXPECT_THROW(c.add(ZMeasurement{"a", "p"}), std::invalid_argument);
  EXPECT_THROW(c.add(ZMeasurement{"a", ""}), std::invalid_argument);
  EXPECT_NO_THROW(c.add(Gate::x("a").when("p")));
  EXPECT_EQ(c.measurement_count(), 1u);
  EXPECT_EQ(c.bound_outcomes(), (std::set<std::string>{"p"}));

  Circuit ext(QubitRegister::of({"a"}));
  ext.allow_external_bits({"r"});
  EXPECT_NO_THROW(ext.add(Gate::z("a").when("r")));
  EXPECT_THROW(ext.add(ZMeasurement{"a", "r"}), std::invalid_argument);
}

TEST(Circuit, AppendRequiresSameRegister) {
  Circuit a(QubitRegister::of({"a"})), b(QubitRegister::of({"b"}));
  EXPECT_THROW(a.add(b), std::invalid_argument);
  Circuit tail(QubitRegister::of({"a"}));
  tail.add(Gate::h("a"));
  a.add(tail);
  EXPECT_EQ(a.steps().size(), 1u);
}

TEST(ParityMeasure, BranchesAreRenormalizedProjections) {
  std::mt19937_64 rng(4);
  const auto psi = random_state(QubitRegister::of({"a", "b", "c"}), rng);
  const auto branches = parity_measure(psi, "a", "c");
  ASSERT_EQ(branches.size(), 2u);
  double total = 0;
  for (const auto& b : branches) {
    const Eigen::VectorXcd proj = oracle::parity_projector(0, 2, b.value, 3) * psi.amplitudes();
    EXPECT_NEAR(b.probability, proj.squaredNorm(), 1e-12);
    EXPECT_LT((b.state.amplitudes() - proj.normalized()).norm(), 1e-12);
    total += b.probability;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(ParityMeasure, ZeroProbabilityBranchIsPruned) {
  const auto s = basis_state(QubitRegister::of({"a", "b"}), BinaryVector{1, 0});
  const auto branches = parity_measure(s, "a", "b");
  ASSERT_EQ(branches.size(), 1u);
  EXPECT_EQ(branches[0].value, 1);
  EXPECT_DOUBLE_EQ(branches[0].probability, 1.0);
  EXPECT_THROW(parity_measure(s, "a", "a"), std::invalid_argument);
}

TEST(ZMeasure, ProjectsOneQubit) {
  const auto branches = z_measure(bell_state(0, 0), "q1");
  ASSERT_EQ(branches.size(), 2u);
  for (const auto& b : branches) {
    EXPECT_NEAR(b.probability, 0.5, 1e-15);
    EXPECT_NEAR(std::abs(b.state.amplitude(b.value ? 3 : 0)), 1.0, 1e-15);
  }
}

Circuit random_circuit(const QubitRegister& reg, int steps, std::mt19937_64& rng) {
  Circuit c(reg);
  const auto labels = reg.labels();
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> kind(0, 9);
  std::vector<std::string> bits;
  auto two = [&] {
    const auto a = pick(rng);
    auto b = pick(rng);
    while (b == a) b = pick(rng);
    return std::pair{labels[a], labels[b]};
  };
  for (int s = 0; s < steps; ++s) {
    const auto [a, b] = two();
    Gate g;
    switch (kind(rng)) {
      case 0: g = Gate::h(a); break;
      case 1: g = Gate::x(a); break;
      case 2: g = Gate::z(a); break;
      case 3: g = Gate::phase_rotation(a, 0.37 * s); break;
      case 4: g = Gate::cnot(a, b); break;
      case 5: g = Gate::cz(a, b); break;
      case 6: g = Gate::controlled_u(a, b, random_unitary(rng)); break;
      case 7:
      case 8:
        bits.push_back("m" + std::to_string(s));
        c.add(ParityMeasurement{a, b, bits.back()});
        continue;
      default:
        bits.push_back("m" + std::to_string(s));
        c.add(ZMeasurement{a, bits.back()});
        continue;
    }
    if (bits.size() >= 2 && s % 2) g = g.when(bits[bits.size() - 1] + " ^ " + bits[bits.size() - 2]);
    c.add(g);
  }
  return c;
}

// Branch enumeration agrees with dense projector algebra on random circuits.
TEST(ExecuteAllBranches, MatchesDenseOracle) {
  std::mt19937_64 rng(2024);
  const auto reg = QubitRegister::of({"a", "b", "c", "d"});
  for (int trial = 0; trial < 40; ++trial) {
    const auto circuit = random_circuit(reg, 14, rng);
    const auto input = random_state(reg, rng);
    const auto got = execute_all_branches(circuit, input);
    const auto want = oracle::run(circuit, input.amplitudes());
    ASSERT_EQ(got.size(), want.size());
    double total = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].outcomes, want[i].outcomes);
      EXPECT_NEAR(got[i].probability, want[i].probability, 1e-10);
      EXPECT_LT((got[i].state.amplitudes() - want[i].state).norm(), 1e-9);
      total += got[i].probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(ExecuteAllBranches, ContinueEqualsConcatenation) {
  std::mt19937_64 rng(77);
  const auto reg = QubitRegister::of({"a", "b", "c"});
  for (int trial = 0; trial < 10; ++trial) {
    const auto head = random_circuit(reg, 6, rng);
    Circuit tail(reg);
    tail.add(ParityMeasurement{"a", "b", "t1"}).add(Gate::h("c")).add(ZMeasurement{"c", "t2"});
    Circuit whole = head;
    whole.add(tail);
    const auto input = random_state(reg, rng);
    const auto a = continue_branches(tail, execute_all_branches(head, input));
    const auto b = execute_all_branches(whole, input);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].outcomes, b[i].outcomes);
      EXPECT_NEAR(a[i].probability, b[i].probability, 1e-12);
    }
  }
}

TEST(ExecuteAllBranches, RejectsForeignInput) {
  Circuit c(QubitRegister::of({"a"}));
  EXPECT_THROW(execute_all_branches(c, basis_state(QubitRegister::of({"b"}), Index{0})), std::invalid_argument);
}

TEST(ApplyGate, ConditionalUsesClassicalBits) {
  const auto zero = basis_state(QubitRegister::of({"a"}), Index{0});
  const auto g = Gate::x("a").when("p ^ q");
  EXPECT_EQ(apply_gate(zero, g, {{"p", 1}, {"q", 0}}).amplitude(1), Complex(1.0));
  EXPECT_EQ(apply_gate(zero, g, {{"p", 1}, {"q", 1}}).amplitude(0), Complex(1.0));
  EXPECT_THROW(apply_gate(zero, g, {{"p", 1}}), std::out_of_range);
}

TEST(ExecuteSample, SameSeedSameBranch) {
  std::mt19937_64 rng(8);
  const auto reg = QubitRegister::of({"a", "b", "c"});
  const auto circuit = random_circuit(reg, 12, rng);
  const auto input = random_state(reg, rng);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = execute_sample(circuit, input, seed);
    const auto y = execute_sample(circuit, input, seed);
    EXPECT_EQ(x.outcomes, y.outcomes);
    EXPECT_EQ(x.state.amplitudes(), y.state.amplitudes());
  }
}

TEST(ExecuteSample, SampledBranchIsAnEnumeratedBranch) {
  std::mt19937_64 rng(12);
  const auto reg = QubitRegister::of({"a", "b", "c"});
  const auto circuit = random_circuit(reg, 12, rng);
  const auto input = random_state(reg, rng);
  const auto all = execute_all_branches(circuit, input);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = execute_sample(circuit, input, seed);
    const auto it = std::find_if(all.begin(), all.end(), [&](const auto& b) { return b.outcomes == s.outcomes; });
    ASSERT_NE(it, all.end());
    EXPECT_NEAR(it->probability, s.probability, 1e-12);
    EXPECT_LT((it->state.amplitudes() - s.state.amplitudes()).norm(), 1e-12);
  }
}

TEST(ExecuteSample, FairParityOverManySeeds) {
  const auto reg = QubitRegister::of({"a", "b"});
  Circuit c(reg);
  c.add(Gate::h("a")).add(ParityMeasurement{"a", "b", "p"});
  const auto input = basis_state(reg, Index{0});
  int ones = 0;
  const int seeds = 10000;
  for (int seed = 0; seed < seeds; ++seed) ones += execute_sample(c, input, static_cast<std::uint64_t>(seed)).outcomes.at("p");
  EXPECT_NEAR(static_cast<double>(ones) / seeds, 0.5, 0.02);
}

TEST(ExecuteSample, BiasedFrequencyMatchesBornRule) {
  const auto reg = QubitRegister::of({"a", "b"});
  Circuit c(reg);
  c.add(Gate::controlled_u("b", "a", Eigen::Matrix2cd::Identity()));
  c.add(ParityMeasurement{"a", "b", "p"});
  Eigen::VectorXcd amps(4);
  amps << std::sqrt(0.8), 0, 0, 0;
  amps[1] = std::sqrt(0.2);
  const PureState input(reg, amps);
  int ones = 0;
  for (int seed = 0; seed < 10000; ++seed) ones += execute_sample(c, input, static_cast<std::uint64_t>(seed)).outcomes.at("p");
  EXPECT_NEAR(ones / 10000.0, 0.2, 0.02);
}

}  // namespace
}  // namespace paritynet
