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

#pragma once

// Dense statevector kernels. Every routine is templated on the complex scalar
// type and works in place on an Eigen column vector of 2^n amplitudes. Qubit q
// of an n-qubit register lives at bit (n - 1 - q) of the amplitude index, so
// qubit 0 is the most significant bit.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <bit>
#include <cstdint>

namespace paritynet {

template <typename Scalar>
using StateVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

using Index = std::uint64_t;

/// Bit mask selecting qubit `q` in an index over `num_qubits` qubits.
constexpr Index qubit_mask(std::size_t q, std::size_t num_qubits) {
  return Index{1} << (num_qubits - 1 - q);
}

namespace gates {

template <typename Scalar>
Matrix2<Scalar> hadamard() {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Real s = Real(1) / std::sqrt(Real(2));
  Matrix2<Scalar> m;
  m << Scalar(s), Scalar(s), Scalar(s), Scalar(-s);
  return m;
}

template <typename Scalar>
Matrix2<Scalar> pauli_x() {
  Matrix2<Scalar> m;
  m << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  return m;
}

template <typename Scalar>
Matrix2<Scalar> pauli_z() {
  Matrix2<Scalar> m;
  m << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
  return m;
}

/// exp(i * angle * Z) = diag(e^{i angle}, e^{-i angle}).
template <typename Scalar>
Matrix2<Scalar> z_rotation(typename Eigen::NumTraits<Scalar>::Real angle) {
  Matrix2<Scalar> m = Matrix2<Scalar>::Zero();
  m(0, 0) = std::polar(decltype(angle)(1), angle);
  m(1, 1) = std::polar(decltype(angle)(1), -angle);
  return m;
}

}  // namespace gates

/// Applies `u` to the qubit selected by `target`. When `control` is non-zero
/// only the amplitude pairs whose index has every control bit set are touched.
template <typename Scalar>
void apply_one_qubit(StateVector<Scalar>& amps, const Matrix2<Scalar>& u,
                     Index target, Index control = 0) {
  const auto dim = static_cast<Index>(amps.size());
  for (Index i = 0; i < dim; ++i) {
    if ((i & target) != 0 || (i & control) != control) continue;
    const Index j = i | target;
    const Scalar a0 = amps[static_cast<Eigen::Index>(i)];
    const Scalar a1 = amps[static_cast<Eigen::Index>(j)];
    amps[static_cast<Eigen::Index>(i)] = u(0, 0) * a0 + u(0, 1) * a1;
    amps[static_cast<Eigen::Index>(j)] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

/// Multiplies every amplitude whose index has both `a` and `b` bits set by -1.
template <typename Scalar>
void apply_cz(StateVector<Scalar>& amps, Index a, Index b) {
  const Index both = a | b;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if ((static_cast<Index>(i) & both) == both) amps[i] = -amps[i];
  }
}

/// Parity (0 or 1) of the bits of `index` selected by `mask`.
constexpr int masked_parity(Index index, Index mask) {
  return static_cast<int>(std::popcount(index & mask) & 1);
}

/// Zeroes every component whose parity over `mask` differs from `parity` and
/// returns the squared norm of what survives. No renormalization happens here.
template <typename Scalar>
typename Eigen::NumTraits<Scalar>::Real project_parity(StateVector<Scalar>& amps,
                                                       Index mask, int parity) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Real kept = 0;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (masked_parity(static_cast<Index>(i), mask) != parity) {
      amps[i] = Scalar(0);
    } else {
      kept += std::norm(amps[i]);
    }
  }
  return kept;
}

/// Squared norm of the components with the given parity over `mask`.
template <typename Scalar>
typename Eigen::NumTraits<Scalar>::Real parity_weight(const StateVector<Scalar>& amps,
                                                      Index mask, int parity) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Real w = 0;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (masked_parity(static_cast<Index>(i), mask) == parity) w += std::norm(amps[i]);
  }
  return w;
}

}  // namespace paritynet
