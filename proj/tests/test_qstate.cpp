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
#include "paritynet/kernels.hpp"
#include "paritynet/qstate.hpp"

namespace paritynet {
namespace {

TEST(QubitRegister, RejectsDuplicateAndOversizedRegisters) {
  EXPECT_THROW(QubitRegister::of({"a", "a"}), std::invalid_argument);
  EXPECT_THROW(QubitRegister::of({""}), std::invalid_argument);
  std::vector<std::string> labels;
  for (int i = 0; i < 25; ++i) labels.push_back("q" + std::to_string(i));
  EXPECT_THROW(QubitRegister::of(labels), std::invalid_argument);
  labels.pop_back();
  EXPECT_EQ(QubitRegister::of(labels).size(), 24u);
}

TEST(QubitRegister, OneSpinAndOneModePerElectron) {
  EXPECT_NO_THROW(QubitRegister({{"s1", QubitRole::spin, 1}, {"k1", QubitRole::mode, 1}}));
  EXPECT_THROW(QubitRegister({{"s1", QubitRole::spin, 1}, {"t1", QubitRole::spin, 1}}), std::invalid_argument);
  const QubitRegister hybrid({{"s1", QubitRole::spin, 1}, {"k1", QubitRole::mode, 1}});
  EXPECT_TRUE(hybrid.is_complete_hybrid());
  EXPECT_FALSE(QubitRegister({{"s1", QubitRole::spin, 1}}).is_complete_hybrid());
}

TEST(QubitRegister, LookupAndMasks) {
  const auto reg = QubitRegister::of({"a", "b", "c"});
  EXPECT_EQ(reg.index_of("b"), 1u);
  EXPECT_EQ(reg.mask_of("a"), 0b100u);
  EXPECT_EQ(reg.mask_of("c"), 0b001u);
  EXPECT_THROW(reg.index_of("z"), std::invalid_argument);
  EXPECT_FALSE(reg.find("z").has_value());
  EXPECT_EQ((reg + QubitRegister::of({"d"})).labels(), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_THROW(reg + QubitRegister::of({"a"}), std::invalid_argument);
}

TEST(QubitRole, StringRoundTrip) {
  EXPECT_EQ(qubit_role_from_string(to_string(QubitRole::mode)), QubitRole::mode);
  EXPECT_EQ(qubit_role_from_string("spin"), QubitRole::spin);
  EXPECT_THROW(qubit_role_from_string("charge"), std::invalid_argument);
}

TEST(BinaryVector, IndexRoundTripAndXor) {
  for (Index v = 0; v < 32; ++v) EXPECT_EQ(BinaryVector::from_index(v, 5).to_index(), v);
  const BinaryVector a{1, 0, 1}, b{1, 1, 0};
  EXPECT_EQ(a ^ b, (BinaryVector{0, 1, 1}));
  EXPECT_EQ(a.complement(), (BinaryVector{0, 1, 0}));
  EXPECT_EQ(a.to_string(), "101");
  EXPECT_EQ(binary_parity(a), 0);
  EXPECT_EQ(binary_parity(b ^ BinaryVector{0, 0, 1}), 1);
  EXPECT_THROW((BinaryVector{0, 2}), std::invalid_argument);
  EXPECT_THROW(a ^ BinaryVector{1}, std::invalid_argument);
}

TEST(PauliString, ProductTracksSign) {
  const auto zx = PauliString::single(1, 0, PauliFactor::Z) * PauliString::single(1, 0, PauliFactor::X);
  EXPECT_EQ(zx.phase(), PhaseFactor::minus_one());
  EXPECT_EQ(zx[0], PauliFactor::XZ);
  const auto xz = PauliString::single(1, 0, PauliFactor::X) * PauliString::single(1, 0, PauliFactor::Z);
  EXPECT_EQ(xz.phase(), PhaseFactor::plus_one());
  EXPECT_EQ(xz.to_string(), "+(XZ)");
  EXPECT_EQ(PauliString::x(BinaryVector{1, 0, 1}).to_string(), "+XIX");
  EXPECT_EQ((PhaseFactor::plus_i() * PhaseFactor::plus_i()), PhaseFactor::minus_one());
}

// Any product of Pauli strings acts like the product of dense matrices.
TEST(PauliString, ActionMatchesDenseOperator) {
  std::mt19937_64 rng(3);
  const auto reg = QubitRegister::of({"a", "b", "c"});
  std::uniform_int_distribution<int> f(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<PauliFactor> fa(3), fb(3);
    oracle::MatrixXcd ma = oracle::MatrixXcd::Identity(8, 8), mb = ma;
    for (std::size_t q = 0; q < 3; ++q) {
      fa[q] = static_cast<PauliFactor>(f(rng));
      fb[q] = static_cast<PauliFactor>(f(rng));
      // XZ means Z first, then X.
      auto dense = [&](PauliFactor p) {
        const int v = static_cast<int>(p);
        oracle::Matrix2cd m = oracle::Matrix2cd::Identity();
        if (v & 2) m = oracle::Z() * m;
        if (v & 1) m = oracle::X() * m;
        return oracle::on(m, q, 3);
      };
      ma = ma * dense(fa[q]);
      mb = mb * dense(fb[q]);
    }
    const auto psi = random_state(reg, rng);
    const auto got = apply_pauli_string(psi, PauliString(fa) * PauliString(fb));
    const Eigen::VectorXcd want = ma * mb * psi.amplitudes();
    EXPECT_LT((got.amplitudes() - want).norm(), 1e-12);
  }
}

TEST(PureState, ValidatesShapeAndNorm) {
  const auto reg = QubitRegister::of({"a"});
  EXPECT_THROW(PureState(reg, Eigen::VectorXcd::Ones(3)), std::invalid_argument);
  EXPECT_THROW(PureState(reg, Eigen::VectorXcd::Ones(2)), std::invalid_argument);
  Eigen::VectorXcd near(2);
  near << 1.0 + 5e-11, 0.0;
  EXPECT_NO_THROW(PureState(reg, near));
  EXPECT_THROW(PureState::normalized(reg, Eigen::VectorXcd::Zero(2)), std::invalid_argument);
  EXPECT_NEAR(PureState::normalized(reg, Eigen::VectorXcd::Ones(2)).norm(), 1.0, 1e-15);
}

TEST(PureState, BasisStateUsesQubitZeroAsMostSignificant) {
  const auto reg = QubitRegister::of({"a", "b", "c"});
  const auto s = basis_state(reg, BinaryVector{1, 0, 0});
  EXPECT_EQ(s.amplitude(4), Complex(1.0));
  EXPECT_LT((s.amplitudes() - oracle::ket("100")).norm(), 1e-15);
  EXPECT_THROW(basis_state(reg, Index{8}), std::out_of_range);
  EXPECT_THROW(basis_state(reg, BinaryVector{1, 0}), std::invalid_argument);
}

TEST(BellStates, MatchTheDefiningTable) {
  const double s = 1.0 / std::sqrt(2.0);
  const std::map<std::pair<int, int>, Eigen::VectorXcd> table = {
      {{0, 0}, s * (oracle::ket("00") + oracle::ket("11"))},
      {{0, 1}, s * (oracle::ket("00") - oracle::ket("11"))},
      {{1, 0}, s * (oracle::ket("01") + oracle::ket("10"))},
      {{1, 1}, s * (oracle::ket("01") - oracle::ket("10"))},
  };
  for (const auto& [ij, want] : table) {
    EXPECT_LT((bell_state(ij.first, ij.second).amplitudes() - want).norm(), 1e-15);
  }
  EXPECT_THROW(bell_state(2, 0), std::invalid_argument);
  EXPECT_THROW(bell_state(0, 0, QubitRegister::of({"a"})), std::invalid_argument);
}

TEST(GhzState, TwoNonzeroAmplitudes) {
  const auto g = ghz_state(4);
  EXPECT_NEAR(g.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(g.amplitude(15).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(g.amplitudes().cwiseAbs().sum(), std::sqrt(2.0), 1e-14);
  EXPECT_THROW(ghz_state(1), std::invalid_argument);
}

TEST(Fidelity, InvariantUnderGlobalPhase) {
  std::mt19937_64 rng(5);
  const auto reg = QubitRegister::of({"a", "b"});
  const auto psi = random_state(reg, rng);
  const PureState rotated(reg, psi.amplitudes() * std::polar(1.0, 1.234));
  EXPECT_NEAR(fidelity_up_to_global_phase(psi, rotated), 1.0, 1e-14);
  EXPECT_GT(max_amplitude_deviation(psi, rotated), 0.1);
  EXPECT_NEAR(fidelity_up_to_global_phase(basis_state(reg, Index{0}), basis_state(reg, Index{1})), 0.0, 1e-15);
  EXPECT_THROW(fidelity_up_to_global_phase(psi, basis_state(QubitRegister::of({"x", "y"}), Index{0})),
               std::invalid_argument);
}

TEST(Tensor, MatchesKronecker) {
  std::mt19937_64 rng(9);
  const auto a = random_state(QubitRegister::of({"a"}), rng);
  const auto b = random_state(QubitRegister::of({"b", "c"}), rng);
  const auto ab = tensor(a, b);
  EXPECT_EQ(ab.qubits().labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_LT((ab.amplitudes() - oracle::kron(a.amplitudes(), b.amplitudes())).norm(), 1e-14);
}

TEST(Permuted, ReordersByLabel) {
  std::mt19937_64 rng(10);
  const auto a = random_state(QubitRegister::of({"a"}), rng);
  const auto b = random_state(QubitRegister::of({"b"}), rng);
  const auto c = random_state(QubitRegister::of({"c"}), rng);
  const auto abc = tensor(tensor(a, b), c);
  const auto cab = permuted(abc, QubitRegister::of({"c", "a", "b"}));
  EXPECT_LT((cab.amplitudes() - tensor(tensor(c, a), b).amplitudes()).norm(), 1e-14);
  EXPECT_THROW(permuted(abc, QubitRegister::of({"c", "a"})), std::invalid_argument);
}

TEST(Factorize, RecoversProductFactors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_state(QubitRegister::of({"a", "b"}), rng);
    const auto c = random_state(QubitRegister::of({"c"}), rng);
    const auto joint = permuted(tensor(a, c), QubitRegister::of({"a", "c", "b"}));
    const auto [rest, part] = factorize(joint, {"c"});
    EXPECT_EQ(rest.qubits().labels(), (std::vector<std::string>{"a", "b"}));
    EXPECT_NEAR(fidelity_up_to_global_phase(part, c), 1.0, 1e-12);
    EXPECT_NEAR(fidelity_up_to_global_phase(rest, a), 1.0, 1e-12);
    // The split is exact, not merely up to phase.
    EXPECT_LT((tensor(rest, part).amplitudes() - permuted(joint, QubitRegister::of({"a", "b", "c"})).amplitudes()).norm(),
              1e-12);
  }
}

TEST(Factorize, RejectsEntangledCut) {
  EXPECT_THROW(factorize(bell_state(0, 0), {"q1"}), std::domain_error);
  EXPECT_THROW(factorize(bell_state(0, 0), {"q0", "q0"}), std::invalid_argument);
}

TEST(RandomUnitary, IsUnitaryAndSeeded) {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    const auto u = random_unitary(a);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_EQ(u, random_unitary(b));
  }
  Eigen::Matrix2cd m;
  m << 1, 1, 0, 1;
  EXPECT_FALSE(is_unitary(m));
}

TEST(Kernels, OneQubitGateMatchesKronecker) {
  std::mt19937_64 rng(1);
  const auto reg = QubitRegister::of({"a", "b", "c", "d"});
  for (std::size_t q = 0; q < 4; ++q) {
    const auto u = random_unitary(rng);
    const auto psi = random_state(reg, rng);
    Eigen::VectorXcd amps = psi.amplitudes();
    apply_one_qubit<Complex>(amps, u, qubit_mask(q, 4));
    EXPECT_LT((amps - oracle::on(u, q, 4) * psi.amplitudes()).norm(), 1e-12);

    const std::size_t c = (q + 1) % 4;
    amps = psi.amplitudes();
    apply_one_qubit<Complex>(amps, u, qubit_mask(q, 4), qubit_mask(c, 4));
    EXPECT_LT((amps - oracle::controlled(u, c, q, 4) * psi.amplitudes()).norm(), 1e-12);

    amps = psi.amplitudes();
    apply_cz<Complex>(amps, qubit_mask(q, 4), qubit_mask(c, 4));
    EXPECT_LT((amps - oracle::cz(q, c, 4) * psi.amplitudes()).norm(), 1e-12);
  }
}

TEST(Kernels, ParityProjectionMatchesProjector) {
  std::mt19937_64 rng(2);
  const auto psi = random_state(QubitRegister::of({"a", "b", "c"}), rng);
  for (int p = 0; p < 2; ++p) {
    Eigen::VectorXcd amps = psi.amplitudes();
    const Index mask = qubit_mask(0, 3) | qubit_mask(2, 3);
    const double w = parity_weight<Complex>(amps, mask, p);
    EXPECT_NEAR(project_parity<Complex>(amps, mask, p), w, 1e-15);
    const Eigen::VectorXcd want = oracle::parity_projector(0, 2, p, 3) * psi.amplitudes();
    EXPECT_LT((amps - want).norm(), 1e-12);
    EXPECT_NEAR(w, want.squaredNorm(), 1e-12);
  }
}

TEST(Kernels, WorkInSinglePrecision) {
  StateVector<std::complex<float>> amps = StateVector<std::complex<float>>::Zero(2);
  amps[0] = 1.0f;
  apply_one_qubit<std::complex<float>>(amps, gates::hadamard<std::complex<float>>(), qubit_mask(0, 1));
  EXPECT_NEAR(std::abs(amps[1]), 1 / std::sqrt(2.0f), 1e-6f);
  EXPECT_NEAR(parity_weight<std::complex<float>>(amps, 1, 0), 0.5f, 1e-6f);
}

}  // namespace
}  // namespace paritynet
