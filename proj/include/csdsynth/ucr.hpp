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

#include <vector>

#include "csdsynth/circuit.hpp"
#include "csdsynth/graycode.hpp"
#include "csdsynth/matrix.hpp"

namespace csdsynth {

/**
 * @brief Uniformly controlled rotation: one rotation of `target` about
 * `axis` for each classical value of the controls.
 *
 * angles[v] is applied when the controls, read as a binary number with
 * controls[0] most significant, equal v. With controls (1..k) and target k+1
 * the matrix is diag(R(angles[0]), ..., R(angles[2^k - 1])).
 */
struct UCRotation {
  Axis axis;
  unsigned target;
  std::vector<unsigned> controls;
  std::vector<double> angles;

  std::size_t num_controls() const { return controls.size(); }
};

/** @throws IndexOutOfRange for repeated, out-of-range or target-equal
 * indices, ShapeMismatch if angles.size() != 2^k. */
void check_ucr(const UCRotation &f, unsigned n);

/** Dense 2^n matrix of f, assembled block by block. */
UnitaryMatrix ucr_matrix(const UCRotation &f, unsigned n);

/**
 * Gate sequence R(t_1) CX(c_1) R(t_2) CX(c_2) ... R(t_N) CX(c_N), N = 2^k,
 * where c_l is the control at the l-th Gray-code transition. Each control is
 * flipped an even number of times, so the CNOTs cancel on every basis state
 * and only the sign pattern of the angles survives.
 *
 * @throws ShapeMismatch if code.bits() != k (ignored for k = 0).
 */
GateList expand_ucr(const UCRotation &f, const GrayCode &code);
GateList expand_ucr(const UCRotation &f);

/** Gate-reversed version of expand_ucr(): starts with a CNOT, ends with a
 * rotation, same matrix. */
GateList expand_ucr_mirrored(const UCRotation &f, const GrayCode &code);
GateList expand_ucr_mirrored(const UCRotation &f);

/** Controls (1..n) minus `target`, ascending: the control set of a
 * rotation on `target` conditioned on every other qubit. */
std::vector<unsigned> all_other_qubits(unsigned target, unsigned n);

/** Basis index x (n bits) with the bit of `qubit` removed, i.e. the control
 * value that all_other_qubits(qubit, n) reads from x. */
std::size_t drop_qubit_bit(std::size_t x, unsigned qubit, unsigned n);

}  // namespace csdsynth
