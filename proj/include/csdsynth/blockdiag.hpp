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

#include "csdsynth/matrix.hpp"
#include "csdsynth/ucr.hpp"

namespace csdsynth {

/**
 * @brief Unitary acting on qubit n conditioned on qubits 1..n-1: block k is
 * the 2x2 unitary applied when the other qubits hold value k.
 */
class BlockDiagUnitary {
 public:
  /** @throws ShapeMismatch, NotUnitary (per block, tolerance 1e-10). */
  BlockDiagUnitary(unsigned n, std::vector<ComplexMatrix> blocks);

  unsigned num_qubits() const { return n_; }
  const std::vector<ComplexMatrix> &blocks() const { return blocks_; }
  ComplexMatrix to_matrix() const;

  /** Left-multiplies m (2^n rows) by this matrix in place. */
  void apply_left(ComplexMatrix &m) const;
  /** this * diag(e^{i phases}). */
  BlockDiagUnitary times_diagonal(std::span<const double> phases) const;
  /** diag(e^{i phases}) * this. */
  BlockDiagUnitary diagonal_times(std::span<const double> phases) const;

 private:
  unsigned n_;
  std::vector<ComplexMatrix> blocks_;
};

/**
 * @brief Diagonal phase matrix that does not depend on the bit of qubit
 * `level`, so it commutes with any rotation of that qubit conditioned on the
 * others.
 *
 * free_angles[v] is the phase of both basis states whose remaining bits
 * (qubit `level` dropped) read v.
 */
struct PhasePattern {
  unsigned level;
  std::vector<double> free_angles;
};

/** The 2^n diagonal phases of p. */
std::vector<double> expand_phase_pattern(const PhasePattern &p, unsigned n);

/** u = e^{i phase} Rz(z1) Ry(y) Rz(z2). */
struct ZYZAngles {
  double phase = 0;
  double z1 = 0;
  double y = 0;
  double z2 = 0;
};

/**
 * y in [0, pi], phase in (-pi/2, pi/2]. When y is 0 or pi to within 1e-14
 * the z freedom collapses to one angle, carried entirely by z1.
 * @throws NotUnitary
 */
ZYZAngles zyz_decompose(const ComplexMatrix &u);
ComplexMatrix zyz_matrix(const ZYZAngles &a);

/** u * expand(pattern) = z_n * y_n * z_level. */
struct BlockSection {
  UCRotation z_n;
  UCRotation y_n;
  UCRotation z_level;
  PhasePattern pattern;
};

/**
 * Splits every block by ZYZ. The z1 and y angles form the two rotations on
 * qubit n; what remains is the diagonal diag_k(e^{i phase_k} Rz(z2_k)).
 * Its part antisymmetric under flipping qubit `level` is exactly a z
 * rotation of that qubit; the symmetric part is cancelled by the returned
 * pattern, which the caller pushes into the neighbouring factor.
 *
 * @throws IndexOutOfRange unless 1 <= level <= n-1.
 */
BlockSection decompose_bj(const BlockDiagUnitary &u, unsigned level);

/** u = z_n * y_n * z_n2 * diag_k(e^{i phases[k]} I_2). */
struct LastBlock {
  UCRotation z_n;
  UCRotation y_n;
  UCRotation z_n2;
  std::vector<double> phases;
};

LastBlock decompose_last_block(const BlockDiagUnitary &u);

/** diag(e^{i phases}) = e^{i global_phase} * product of cascade. */
struct DiagonalCascade {
  std::vector<UCRotation> cascade;  // targets m, m-1, ..., 1
  double global_phase = 0;
};

/**
 * Peels off, for qubit m down to 1, the part of the phase vector that is
 * antisymmetric in that qubit's bit as a z rotation controlled by the lower
 * numbered qubits; what remains at the end is a global phase.
 *
 * @throws NotPowerOfTwo if phases.size() is not 2^m with m >= 1.
 */
DiagonalCascade decompose_diagonal(std::span<const double> phases);

}  // namespace csdsynth
