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

#include "csdsynth/blockdiag.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "csdsynth/errors.hpp"

namespace csdsynth {

BlockDiagUnitary::BlockDiagUnitary(
    unsigned n, std::vector<ComplexMatrix> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || blocks_.size() != (std::size_t{1} << (n - 1))) {
    throw ShapeMismatch("block-diagonal unitary needs 2^(n-1) blocks");
  }
  for (const auto &b : blocks_) {
    if (b.rows() != 2 || b.cols() != 2) throw ShapeMismatch("blocks are 2x2");
    const double dev = unitarity_deviation(b);
    if (!(dev <= kDefaultUnitarityTol)) throw NotUnitary(dev);
  }
}

ComplexMatrix BlockDiagUnitary::to_matrix() const {
  return block_diagonal(blocks_);
}

void BlockDiagUnitary::apply_left(ComplexMatrix &m) const {
  if (m.rows() != 2 * blocks_.size()) {
    throw ShapeMismatch("apply_left: row count mismatch");
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const ComplexMatrix &b = blocks_[k];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex x = m(2 * k, c), y = m(2 * k + 1, c);
      m(2 * k, c) = b(0, 0) * x + b(0, 1) * y;
      m(2 * k + 1, c) = b(1, 0) * x + b(1, 1) * y;
    }
  }
}

BlockDiagUnitary BlockDiagUnitary::times_diagonal(
    std::span<const double> phases) const {
  auto blocks = blocks_;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t c = 0; c < 2; ++c) {
      const Complex f = std::polar(1.0, phases[2 * k + c]);
      blocks[k](0, c) *= f;
      blocks[k](1, c) *= f;
    }
  }
  return BlockDiagUnitary(n_, std::move(blocks));
}

BlockDiagUnitary BlockDiagUnitary::diagonal_times(
    std::span<const double> phases) const {
  auto blocks = blocks_;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t r = 0; r < 2; ++r) {
      const Complex f = std::polar(1.0, phases[2 * k + r]);
      blocks[k](r, 0) *= f;
      blocks[k](r, 1) *= f;
    }
  }
  return BlockDiagUnitary(n_, std::move(blocks));
}

std::vector<double> expand_phase_pattern(const PhasePattern &p, unsigned n) {
  if (p.level < 1 || p.level > n ||
      p.free_angles.size() != (std::size_t{1} << (n - 1))) {
    throw ShapeMismatch("phase pattern does not fit the qubit count");
  }
  std::vector<double> out(std::size_t{1} << n);
  for (std::size_t x = 0; x < out.size(); ++x) {
    out[x] = p.free_angles[drop_qubit_bit(x, p.level, n)];
  }
  return out;
}

ZYZAngles zyz_decompose(const ComplexMatrix &u) {
  if (u.rows() != 2 || u.cols() != 2) throw ShapeMismatch("zyz needs 2x2");
  const double dev = unitarity_deviation(u);
  if (!(dev <= kDefaultUnitarityTol)) throw NotUnitary(dev);

  ZYZAngles out;
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  out.phase = std::arg(det) / 2;
  const Complex unphase = std::polar(1.0, -out.phase);
  const Complex a = u(0, 0) * unphase;
  const Complex b = u(0, 1) * unphase;
  const double ma = std::abs(a), mb = std::abs(b);
  out.y = 2 * std::atan2(mb, ma);
  constexpr double kDegenerate = 1e-14;
  if (mb < kDegenerate) {
    out.z1 = 2 * std::arg(a);
  } else if (ma < kDegenerate) {
    out.z1 = 2 * std::arg(b);
  } else {
    out.z1 = std::arg(a) + std::arg(b);
    out.z2 = std::arg(a) - std::arg(b);
  }
  return out;
}

ComplexMatrix zyz_matrix(const ZYZAngles &a) {
  return std::polar(1.0, a.phase) *
         (rotation_matrix(Axis::Z, a.z1) * rotation_matrix(Axis::Y, a.y) *
          rotation_matrix(Axis::Z, a.z2));
}

namespace {

std::vector<ZYZAngles> split_blocks(const BlockDiagUnitary &u) {
  std::vector<ZYZAngles> out;
  out.reserve(u.blocks().size());
  for (const auto &b : u.blocks()) out.push_back(zyz_decompose(b));
  return out;
}

UCRotation target_n_rotation(
    Axis axis, unsigned n, const std::vector<ZYZAngles> &parts,
    double ZYZAngles::*field) {
  UCRotation r{axis, n, all_other_qubits(n, n), {}};
  r.angles.reserve(parts.size());
  for (const auto &p : parts) r.angles.push_back(p.*field);
  return r;
}

}  // namespace

BlockSection decompose_bj(const BlockDiagUnitary &u, unsigned level) {
  const unsigned n = u.num_qubits();
  if (level < 1 || level >= n) {
    throw IndexOutOfRange("decompose_bj: level outside 1..n-1");
  }
  const auto parts = split_blocks(u);
  const std::size_t dim = std::size_t{1} << n;

  // Residual diagonal diag_k(e^{i phase_k} Rz(z2_k)) as 2^n phases.
  std::vector<double> residual(dim);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    residual[2 * k] = parts[k].phase + parts[k].z2 / 2;
    residual[2 * k + 1] = parts[k].phase - parts[k].z2 / 2;
  }

  const std::size_t mask = std::size_t{1} << (n - level);
  BlockSection out{
      target_n_rotation(Axis::Z, n, parts, &ZYZAngles::z1),
      target_n_rotation(Axis::Y, n, parts, &ZYZAngles::y),
      UCRotation{
          Axis::Z, level, all_other_qubits(level, n),
          std::vector<double>(dim / 2)},
      PhasePattern{level, std::vector<double>(dim / 2)}};
  for (std::size_t x = 0; x < dim; ++x) {
    if (x & mask) continue;
    const double d0 = residual[x], d1 = residual[x | mask];
    const std::size_t v = drop_qubit_bit(x, level, n);
    out.z_level.angles[v] = d0 - d1;
    out.pattern.free_angles[v] = -(d0 + d1) / 2;
  }
  return out;
}

LastBlock decompose_last_block(const BlockDiagUnitary &u) {
  const unsigned n = u.num_qubits();
  const auto parts = split_blocks(u);
  LastBlock out{
      target_n_rotation(Axis::Z, n, parts, &ZYZAngles::z1),
      target_n_rotation(Axis::Y, n, parts, &ZYZAngles::y),
      target_n_rotation(Axis::Z, n, parts, &ZYZAngles::z2),
      {}};
  for (const auto &p : parts) out.phases.push_back(p.phase);
  return out;
}

DiagonalCascade decompose_diagonal(std::span<const double> phases) {
  const std::size_t size = phases.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw NotPowerOfTwo("diagonal needs 2^m phases with m >= 1");
  }
  const auto m = static_cast<unsigned>(std::countr_zero(size));
  DiagonalCascade out;
  std::vector<double> current(phases.begin(), phases.end());
  for (unsigned q = m; q >= 1; --q) {
    std::vector<double> rest(current.size() / 2);
    UCRotation r{Axis::Z, q, {}, std::vector<double>(rest.size())};
    for (unsigned c = 1; c < q; ++c) r.controls.push_back(c);
    for (std::size_t v = 0; v < rest.size(); ++v) {
      r.angles[v] = current[2 * v] - current[2 * v + 1];
      rest[v] = (current[2 * v] + current[2 * v + 1]) / 2;
    }
    out.cascade.push_back(std::move(r));
    current = std::move(rest);
  }
  out.global_phase = current[0];
  return out;
}

}  // namespace csdsynth
