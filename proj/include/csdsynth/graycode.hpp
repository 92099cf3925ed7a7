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

#include <cstdint>
#include <span>
#include <vector>

namespace csdsynth {

/**
 * @brief A cyclic k-bit Gray code.
 *
 * Words are stored as integers whose most significant of the k bits is bit
 * position 1. Adjacent words, including last and first, differ in exactly
 * one bit; this is checked at construction.
 */
class GrayCode {
 public:
  /** @throws NotGray if words is not a cyclic Gray code over all k-bit
   * strings. */
  GrayCode(unsigned k, std::vector<std::uint32_t> words);

  unsigned bits() const { return k_; }
  std::size_t size() const { return words_.size(); }
  std::span<const std::uint32_t> words() const { return words_; }
  std::uint32_t operator[](std::size_t l) const { return words_[l]; }

 private:
  unsigned k_;
  std::vector<std::uint32_t> words_;
};

/** Binary reflected Gray code: words[j] = j ^ (j >> 1). Requires 1 <= k <=
 * 16. */
GrayCode binary_reflected_gray(unsigned k);

/**
 * Bit positions (1 = most significant) at which consecutive words change.
 * Entry l-1 is the change from word l-1 to word l; the last entry closes the
 * cycle from the final word back to the first.
 */
std::vector<unsigned> transition_positions(const GrayCode &code);

/** Entry (i, j) of the angle-transform matrix, 1-based:
 * (-1)^{popcount(binary(i-1) & brgc(j-1))}. */
int m_matrix_entry(unsigned k, std::uint32_t i, std::uint32_t j);

/** In-place unnormalized Walsh-Hadamard transform. */
void walsh_hadamard(std::span<double> values);

/**
 * @brief Solves M theta = alpha for the rotation angles of a uniformly
 * controlled rotation built from `code`.
 *
 * Slot l of the gate sequence sees the target flipped for control value b
 * iff b . (g_{l-1} ^ g_0) is odd, so M_{b,l} = (-1)^{b.(g_{l-1} ^ g_0)}.
 * For the BRGC g_0 = 0 and this is the textbook matrix. Since M is a column
 * permutation of the Walsh-Hadamard matrix, theta = 2^-k M^T alpha is one
 * transform plus a gather.
 *
 * @throws NotPowerOfTwo if alphas.size() != 2^k.
 */
std::vector<double> solve_rotation_angles(
    std::span<const double> alphas, const GrayCode &code);
std::vector<double> solve_rotation_angles(std::span<const double> alphas);

/** zeta(i, j) = 2^{n-i-1} (2j - 1): global position of the cosine-sine
 * factor produced at recursion level i, slot j. */
std::uint32_t zeta(unsigned level, std::uint32_t j, unsigned n);

/** Recursion level of the cosine-sine factor at global position j, i.e. the
 * inverse of zeta. Equals n minus the 1-based index (from the right) of the
 * lowest set bit of j. */
unsigned gamma(std::uint32_t j, unsigned n);

}  // namespace csdsynth
