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

#include "csdsynth/graycode.hpp"

#include <bit>
#include <string>

#include "csdsynth/errors.hpp"

namespace csdsynth {

GrayCode::GrayCode(unsigned k, std::vector<std::uint32_t> words)
    : k_(k), words_(std::move(words)) {
  if (k < 1 || k > 16) throw NotGray("Gray code width must be in 1..16");
  const std::size_t size = std::size_t{1} << k;
  if (words_.size() != size) throw NotGray("Gray code has wrong length");
  std::vector<bool> seen(size, false);
  for (std::size_t l = 0; l < size; ++l) {
    const std::uint32_t w = words_[l];
    if (w >= size || seen[w]) {
      throw NotGray("Gray code words are not a permutation");
    }
    seen[w] = true;
    const std::uint32_t next = words_[(l + 1) % size];
    if (std::popcount(w ^ next) != 1) {
      throw NotGray(
          "words " + std::to_string(l) + " and " +
          std::to_string((l + 1) % size) + " differ in more than one bit");
    }
  }
}

GrayCode binary_reflected_gray(unsigned k) {
  if (k < 1 || k > 16) throw NotGray("Gray code width must be in 1..16");
  std::vector<std::uint32_t> words(std::size_t{1} << k);
  for (std::uint32_t j = 0; j < words.size(); ++j) words[j] = j ^ (j >> 1);
  return GrayCode(k, std::move(words));
}

std::vector<unsigned> transition_positions(const GrayCode &code) {
  const std::size_t size = code.size();
  std::vector<unsigned> out(size);
  for (std::size_t l = 0; l < size; ++l) {
    const std::uint32_t diff = code[l] ^ code[(l + 1) % size];
    if (std::popcount(diff) != 1) throw NotGray("adjacent words differ");
    // bit b (from the right, 0-based) is position k - b.
    out[l] = code.bits() - static_cast<unsigned>(std::countr_zero(diff));
  }
  return out;
}

int m_matrix_entry(unsigned k, std::uint32_t i, std::uint32_t j) {
  const std::uint32_t size = std::uint32_t{1} << k;
  if (i < 1 || j < 1 || i > size || j > size) {
    throw IndexOutOfRange("m_matrix_entry index out of range");
  }
  const std::uint32_t b = i - 1;
  const std::uint32_t g = (j - 1) ^ ((j - 1) >> 1);
  return std::popcount(b & g) % 2 == 0 ? 1 : -1;
}

void walsh_hadamard(std::span<double> values) {
  const std::size_t size = values.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * h) {
      for (std::size_t i = base; i < base + h; ++i) {
        const double x = values[i];
        const double y = values[i + h];
        values[i] = x + y;
        values[i + h] = x - y;
      }
    }
  }
}

std::vector<double> solve_rotation_angles(
    std::span<const double> alphas, const GrayCode &code) {
  if (alphas.size() != code.size()) {
    throw NotPowerOfTwo(
        "expected " + std::to_string(code.size()) + " angles, got " +
        std::to_string(alphas.size()));
  }
  std::vector<double> spectrum(alphas.begin(), alphas.end());
  walsh_hadamard(spectrum);
  const double scale = 1.0 / static_cast<double>(code.size());
  std::vector<double> thetas(code.size());
  for (std::size_t l = 0; l < code.size(); ++l) {
    thetas[l] = spectrum[code[l] ^ code[0]] * scale;
  }
  return thetas;
}

std::vector<double> solve_rotation_angles(std::span<const double> alphas) {
  const std::size_t size = alphas.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw NotPowerOfTwo("angle vector length must be 2^k with k >= 1");
  }
  return solve_rotation_angles(
      alphas, binary_reflected_gray(
                  static_cast<unsigned>(std::countr_zero(size))));
}

std::uint32_t zeta(unsigned level, std::uint32_t j, unsigned n) {
  if (n < 2 || level < 1 || level > n - 1 || j < 1 ||
      j > (std::uint32_t{1} << (level - 1))) {
    throw IndexOutOfRange("zeta: invalid recursion coordinates");
  }
  return (std::uint32_t{1} << (n - level - 1)) * (2 * j - 1);
}

unsigned gamma(std::uint32_t j, unsigned n) {
  if (n < 2 || j < 1 || j >= (std::uint32_t{1} << (n - 1))) {
    throw IndexOutOfRange("gamma: position out of range");
  }
  return n - (static_cast<unsigned>(std::countr_zero(j)) + 1);
}

}  // namespace csdsynth
