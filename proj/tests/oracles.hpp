// Copyright 2026 The csdsynth Authors
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

// Test-only reference constructions. Everything here builds matrices from
// Kronecker products and dense multiplication, independent of the bitmask
// simulator and the block assembly used by the library.
#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "csdsynth/circuit.hpp"
#include "csdsynth/matrix.hpp"
#include "csdsynth/ucr.hpp"

namespace csdsynth::testing {

inline ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix projector(int bit) {
  return bit == 0 ? ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}
                  : ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}};
}

/** Explicit 2x2 rotation from the exponential form cos + i a.sigma sin. */
inline ComplexMatrix rotation_from_pauli(Axis axis, double angle) {
  const Complex i(0, 1);
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const ComplexMatrix sigma = axis == Axis::Y
                                  ? ComplexMatrix{{0.0, -i}, {i, 0.0}}
                                  : ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
  return Complex(c) * ComplexMatrix::identity(2) + (i * s) * sigma;
}

/** Tensor product of per-qubit 2x2 factors, qubit 1 leftmost. */
inline ComplexMatrix tensor(const std::vector<ComplexMatrix> &factors) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (const auto &f : factors) out = kron(out, f);
  return out;
}

inline ComplexMatrix single_qubit_op(const ComplexMatrix &op, unsigned q, unsigned n) {
  std::vector<ComplexMatrix> f(n, ComplexMatrix::identity(2));
  f[q - 1] = op;
  return tensor(f);
}

/** op on `target` applied only when each control qubit holds the given bit. */
inline ComplexMatrix controlled_op(
    const ComplexMatrix &op, const std::vector<unsigned> &controls,
    std::uint32_t value, unsigned target, unsigned n) {
  std::vector<ComplexMatrix> active(n, ComplexMatrix::identity(2));
  const std::size_t k = controls.size();
  for (std::size_t c = 0; c < k; ++c) {
    active[controls[c] - 1] = projector((value >> (k - 1 - c)) & 1);
  }
  ComplexMatrix proj = tensor(active);
  active[target - 1] = op;
  ComplexMatrix applied = tensor(active);
  return applied + (ComplexMatrix::identity(std::size_t{1} << n) - proj);
}

inline ComplexMatrix dense_gate(const Gate &g, unsigned n) {
  if (const auto *x = std::get_if<Cnot>(&g)) {
    return controlled_op(pauli_x(), {x->control}, 1, x->target, n);
  }
  if (const auto *r = std::get_if<Rot>(&g)) {
    return single_qubit_op(rotation_from_pauli(r->axis, r->angle), r->qubit, n);
  }
  return std::polar(1.0, std::get<GlobalPhase>(g).angle) *
         ComplexMatrix::identity(std::size_t{1} << n);
}

/** G_last ... G_1 by dense multiplication. */
inline ComplexMatrix dense_circuit(const GateList &gates, unsigned n) {
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << n);
  for (const auto &g : gates) m = dense_gate(g, n) * m;
  return m;
}

/** Product of the 2^k individually controlled rotations, in `order`. */
inline ComplexMatrix brute_force_ucr(
    const UCRotation &f, unsigned n, const std::vector<std::uint32_t> &order) {
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << n);
  for (std::uint32_t v : order) {
    m = controlled_op(
            rotation_from_pauli(f.axis, f.angles[v]), f.controls, v, f.target, n) *
        m;
  }
  return m;
}

inline std::vector<double> random_angles(std::mt19937_64 &rng, std::size_t count) {
  std::uniform_real_distribution<double> d(-M_PI, M_PI);
  std::vector<double> out(count);
  for (auto &x : out) x = d(rng);
  return out;
}

inline ComplexMatrix random_complex(std::mt19937_64 &rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> d;
  ComplexMatrix m(r, c);
  for (auto &z : m.data()) {
    const double re = d(rng);
    z = {re, d(rng)};
  }
  return m;
}

}  // namespace csdsynth::testing
