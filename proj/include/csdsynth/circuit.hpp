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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "csdsynth/matrix.hpp"

namespace csdsynth {

enum class Axis { Y, Z };

/** Qubits are 1-based; qubit 1 is the most significant bit of a basis index. */
struct Cnot {
  unsigned control;
  unsigned target;
  friend bool operator==(const Cnot &, const Cnot &) = default;
};

/**
 * Rotation R_a(angle) = exp(+i a.sigma angle/2), so
 * Ry(t) = [[cos t/2, sin t/2], [-sin t/2, cos t/2]] and
 * Rz(t) = diag(e^{it/2}, e^{-it/2}).
 */
struct Rot {
  Axis axis;
  unsigned qubit;
  double angle;
  friend bool operator==(const Rot &, const Rot &) = default;
};

/** Multiplies the whole state by e^{i angle}. */
struct GlobalPhase {
  double angle;
  friend bool operator==(const GlobalPhase &, const GlobalPhase &) = default;
};

using Gate = std::variant<Cnot, Rot, GlobalPhase>;
using GateList = std::vector<Gate>;

/** 2x2 matrix of a rotation in the convention above. */
ComplexMatrix rotation_matrix(Axis axis, double angle);

/**
 * @brief Ordered list of elementary gates on n qubits. The first gate is
 * applied first, so the circuit's matrix is G_last ... G_1.
 */
class Circuit {
 public:
  explicit Circuit(unsigned n);
  Circuit(unsigned n, GateList gates);

  unsigned num_qubits() const { return n_; }
  const GateList &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /** @throws IndexOutOfRange for bad qubit indices, Error for a second
   * global phase gate. */
  void add(const Gate &g);
  void append(std::span<const Gate> gates);

  friend bool operator==(const Circuit &, const Circuit &) = default;

 private:
  unsigned n_;
  GateList gates_;
  bool has_phase_ = false;
};

struct GateCounts {
  std::size_t cnot = 0;
  /** Rotations plus the global phase gate. */
  std::size_t one_qubit = 0;
  friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/** Applies g to a state of length 2^n; n is inferred from the length.
 * @throws ShapeMismatch if the length is not 2^n with n covering g. */
std::vector<Complex> apply_gate(std::vector<Complex> state, const Gate &g);

/** Full matrix of the circuit, global phase included. */
UnitaryMatrix reconstruct(const Circuit &c);

/** Left-multiplies m (2^n rows) by the circuit, in place. */
void apply_circuit(const Circuit &c, ComplexMatrix &m);

GateCounts count_gates(const Circuit &c);
GateCounts count_gates(std::span<const Gate> gates);

/** Removes consecutive identical CNOT pairs until none remain. Only strict
 * list adjacency counts; no commutation is attempted. */
Circuit cancel_adjacent_cnots(const Circuit &c);
GateList cancel_adjacent_cnots(std::span<const Gate> gates);

/** Drops rotations with |angle| < tol. The phase gate is kept. */
Circuit prune_zero_rotations(const Circuit &c, double tol = 1e-12);

}  // namespace csdsynth
