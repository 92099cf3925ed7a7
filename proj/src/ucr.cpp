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

#include "csdsynth/ucr.hpp"

#include <algorithm>
#include <string>

#include "csdsynth/errors.hpp"

namespace csdsynth {

void check_ucr(const UCRotation &f, unsigned n) {
  std::vector<bool> used(n + 1, false);
  auto claim = [&](unsigned q) {
    if (q < 1 || q > n || used[q]) {
      throw IndexOutOfRange(
          "uniformly controlled rotation uses qubit " + std::to_string(q) +
          " invalidly on " + std::to_string(n) + " qubits");
    }
    used[q] = true;
  };
  claim(f.target);
  for (unsigned c : f.controls) claim(c);
  if (f.angles.size() != (std::size_t{1} << f.controls.size())) {
    throw ShapeMismatch("uniformly controlled rotation needs 2^k angles");
  }
}

UnitaryMatrix ucr_matrix(const UCRotation &f, unsigned n) {
  check_ucr(f, n);
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t tmask = std::size_t{1} << (n - f.target);
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(f.angles.size());
  for (double a : f.angles) blocks.push_back(rotation_matrix(f.axis, a));

  ComplexMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t value = 0;
    for (unsigned c : f.controls) {
      value = (value << 1) | ((col >> (n - c)) & 1);
    }
    const std::size_t tbit = (col & tmask) ? 1 : 0;
    const std::size_t base = col & ~tmask;
    const ComplexMatrix &r = blocks[value];
    m(base, col) = r(0, tbit);
    m(base | tmask, col) = r(1, tbit);
  }
  return validate_unitary(std::move(m));
}

namespace {

struct Expansion {
  std::vector<double> thetas;
  std::vector<unsigned> controls;  // CNOT control for slot l
};

Expansion solve_expansion(const UCRotation &f, const GrayCode &code) {
  if (code.bits() != f.num_controls()) {
    throw ShapeMismatch(
        "Gray code has " + std::to_string(code.bits()) + " bits but the " +
        "rotation has " + std::to_string(f.num_controls()) + " controls");
  }
  Expansion e;
  e.thetas = solve_rotation_angles(f.angles, code);
  for (unsigned pos : transition_positions(code)) {
    e.controls.push_back(f.controls[pos - 1]);
  }
  return e;
}

}  // namespace

GateList expand_ucr(const UCRotation &f, const GrayCode &code) {
  if (f.controls.empty()) return {Rot{f.axis, f.target, f.angles.at(0)}};
  const Expansion e = solve_expansion(f, code);
  GateList out;
  out.reserve(2 * e.thetas.size());
  for (std::size_t l = 0; l < e.thetas.size(); ++l) {
    out.emplace_back(Rot{f.axis, f.target, e.thetas[l]});
    out.emplace_back(Cnot{e.controls[l], f.target});
  }
  return out;
}

GateList expand_ucr_mirrored(const UCRotation &f, const GrayCode &code) {
  if (f.controls.empty()) return {Rot{f.axis, f.target, f.angles.at(0)}};
  // Reversal keeps the parity of flips seen by every slot (the total count
  // per control is even), so the forward solution applies unchanged.
  const Expansion e = solve_expansion(f, code);
  GateList out;
  out.reserve(2 * e.thetas.size());
  for (std::size_t l = e.thetas.size(); l-- > 0;) {
    out.emplace_back(Cnot{e.controls[l], f.target});
    out.emplace_back(Rot{f.axis, f.target, e.thetas[l]});
  }
  return out;
}

GateList expand_ucr(const UCRotation &f) {
  if (f.controls.empty()) return expand_ucr(f, binary_reflected_gray(1));
  return expand_ucr(
      f, binary_reflected_gray(static_cast<unsigned>(f.num_controls())));
}

GateList expand_ucr_mirrored(const UCRotation &f) {
  if (f.controls.empty()) return expand_ucr_mirrored(f, binary_reflected_gray(1));
  return expand_ucr_mirrored(
      f, binary_reflected_gray(static_cast<unsigned>(f.num_controls())));
}

std::vector<unsigned> all_other_qubits(unsigned target, unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 1; q <= n; ++q) {
    if (q != target) out.push_back(q);
  }
  return out;
}

std::size_t drop_qubit_bit(std::size_t x, unsigned qubit, unsigned n) {
  const unsigned low = n - qubit;  // bits below the dropped one
  const std::size_t low_mask = (std::size_t{1} << low) - 1;
  return ((x >> (low + 1)) << low) | (x & low_mask);
}

}  // namespace csdsynth
