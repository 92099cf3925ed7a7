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

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "csdsynth/blockdiag.hpp"
#include "csdsynth/circuit.hpp"
#include "csdsynth/graycode.hpp"
#include "csdsynth/matrix.hpp"

namespace csdsynth {

/** Cosine-sine factor at global position j, acting as a y rotation of qubit
 * `level` conditioned on all other qubits with angles 2 * thetas. */
struct AFactor {
  std::uint32_t position;
  unsigned level;
  std::vector<double> thetas;

  UCRotation as_rotation(unsigned n) const;
  /** Left-multiplies m by the factor in place. */
  void apply_left(ComplexMatrix &m, unsigned n) const;
};

/**
 * @brief u = B_1 A_1 B_2 A_2 ... A_{N-1} B_N with N = 2^{n-1}.
 *
 * After absorption every B_j (j < N) equals sections[j-1] exactly, and the
 * final B_N equals `last` times the diagonal whose cascade is `diagonal`.
 */
struct DecompositionPlan {
  unsigned n = 0;
  std::vector<AFactor> a_factors;          // positions 1..N-1
  std::vector<BlockDiagUnitary> b_factors;  // B_1..B_N
  bool absorbed = false;
  std::vector<BlockSection> sections;  // B_1..B_{N-1}, when absorbed
  std::optional<LastBlock> last;
  std::optional<DiagonalCascade> diagonal;
};

struct PlanOptions {
  /** Push each B_j's phase pattern into B_{j+1} and decompose the blocks. */
  bool absorb = true;
  /** Multiply the plan back out and throw PlanVerificationFailure if it
   * misses the input by more than 1e-9 (Frobenius). */
  bool verify = true;
};

/** @throws ShapeMismatch for n < 2, plus anything cs_decompose throws. */
DecompositionPlan build_plan(const UnitaryMatrix &u, const PlanOptions &options = {});

/** Dense product of the plan's factors. */
ComplexMatrix plan_product(const DecompositionPlan &plan);

using GrayCodeFactory = std::function<GrayCode(unsigned bits)>;

struct SynthesisOptions {
  /** Mirror the second rotation at each seam so the touching CNOTs cancel. */
  bool mirror = true;
  bool prune_zero = false;
  /** Compute reconstruction_error (one full simulation). */
  bool verify = true;
  /** Gray code for each control count; binary reflected when empty. */
  GrayCodeFactory gray{};
};

/** Gate counts of one B A section, or of the final block (j = N). */
struct SectionCounts {
  std::uint32_t j;
  GateCounts counts;
};

struct SynthesisReport {
  GateCounts counts;
  std::uint64_t expected_cnot = 0;
  std::uint64_t expected_one_qubit = 0;
  std::uint64_t lower_bound_cnot = 0;
  /** Frobenius distance between the circuit's matrix and the target; NaN
   * when verification was skipped. */
  double reconstruction_error = 0;
  std::chrono::nanoseconds elapsed{};
  /** Final block first, then j = N-1 down to 1 (application order). */
  std::vector<SectionCounts> sections;
};

struct SynthesisResult {
  Circuit circuit;
  SynthesisReport report;
};

/** 4^n - 2^{n+1} for n >= 2, 0 for n = 1. */
std::uint64_t expected_cnot_count(unsigned n);
std::uint64_t expected_one_qubit_count(unsigned n);
/** ceil((4^n - 3n - 1) / 4). */
std::uint64_t cnot_lower_bound(unsigned n);

/**
 * @brief Circuit whose matrix equals u exactly, global phase included.
 *
 * Application order is the final block (phase, diagonal cascade, z y z on
 * qubit n) followed by the sections j = N-1 .. 1, each as
 * y(level) z(level) y(n) z(n).
 */
SynthesisResult synthesize(
    const UnitaryMatrix &u, const SynthesisOptions &options = {});

/** Diagonal unitary diag(e^{i phases}) with 2^n - 2 CNOTs and 2^n one-qubit
 * gates. */
SynthesisResult synthesize_diagonal(
    std::span<const double> phases, const SynthesisOptions &options = {});

}  // namespace csdsynth
