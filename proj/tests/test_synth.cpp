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

#include <doctest.h>
#include <cmath>
#include <random>

#include "csdsynth/errors.hpp"
#include "csdsynth/synth.hpp"
#include "oracles.hpp"

using namespace csdsynth;

namespace {

GateCounts section_total(const SynthesisReport &r) {
  GateCounts sum;
  for (const auto &s : r.sections) {
    sum.cnot += s.counts.cnot;
    sum.one_qubit += s.counts.one_qubit;
  }
  return sum;
}

}  // namespace

TEST_CASE("count formulas") {
  CHECK(expected_cnot_count(1) == 0);
  CHECK(expected_cnot_count(2) == 8);
  CHECK(expected_cnot_count(3) == 48);
  CHECK(expected_cnot_count(4) == 224);
  CHECK(expected_one_qubit_count(3) == 64);
  CHECK(cnot_lower_bound(2) == 3);
  CHECK(cnot_lower_bound(3) == 14);
  CHECK(cnot_lower_bound(4) == 61);
}

TEST_CASE("plan structure for three qubits") {
  const DecompositionPlan p = build_plan(validate_unitary(ComplexMatrix::identity(8)));
  CHECK(p.n == 3);
  REQUIRE(p.a_factors.size() == 3);
  CHECK(p.a_factors[0].level == 2);
  CHECK(p.a_factors[1].level == 1);
  CHECK(p.a_factors[2].level == 2);
  for (std::uint32_t j = 0; j < 3; ++j) CHECK(p.a_factors[j].position == j + 1);
  CHECK(p.b_factors.size() == 4);
  CHECK(p.absorbed);
  CHECK(p.sections.size() == 3);
  CHECK(p.last.has_value());
  CHECK(p.diagonal.has_value());
  CHECK(frobenius_distance(plan_product(p), ComplexMatrix::identity(8)) < 1e-14);
  CHECK_THROWS_AS(build_plan(validate_unitary(ComplexMatrix::identity(2))), ShapeMismatch);
}

TEST_CASE("A factors are y rotations with doubled angles") {
  const DecompositionPlan p = build_plan(haar_random_unitary(3, 7));
  for (const AFactor &a : p.a_factors) {
    const UCRotation r = a.as_rotation(3);
    CHECK(r.axis == Axis::Y);
    CHECK(r.target == a.level);
    for (std::size_t v = 0; v < a.thetas.size(); ++v) CHECK(r.angles[v] == 2 * a.thetas[v]);
    ComplexMatrix m = ComplexMatrix::identity(8);
    a.apply_left(m, 3);
    CHECK(frobenius_distance(m, ucr_matrix(r, 3).matrix()) < 1e-15);
  }
}

TEST_CASE("plan product reproduces the input") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const UnitaryMatrix u = haar_random_unitary(n, 50 + seed);
      for (bool absorb : {false, true}) {
        const DecompositionPlan p = build_plan(u, PlanOptions{absorb, false});
        CHECK(p.absorbed == absorb);
        CHECK(frobenius_distance(plan_product(p), u.matrix()) < 1e-10);
      }
    }
  }
}

TEST_CASE("absorbed sections match the stored B factors") {
  const unsigned n = 3;
  const UnitaryMatrix u = haar_random_unitary(n, 99);
  const DecompositionPlan raw = build_plan(u, PlanOptions{false, true});
  const DecompositionPlan p = build_plan(u);
  // Absorption only reshuffles phases between neighbouring B factors.
  REQUIRE(raw.b_factors.size() == p.b_factors.size());
  ComplexMatrix raw_prod = ComplexMatrix::identity(8), prod = ComplexMatrix::identity(8);
  for (std::size_t j = 0; j < p.sections.size(); ++j) {
    const BlockSection &s = p.sections[j];
    const ComplexMatrix sec = ucr_matrix(s.z_n, n).matrix() * ucr_matrix(s.y_n, n).matrix() *
                              ucr_matrix(s.z_level, n).matrix();
    CHECK(frobenius_distance(sec, p.b_factors[j].to_matrix()) < 1e-12);
  }
  for (std::size_t j = 0; j < p.b_factors.size(); ++j) {
    raw_prod = raw_prod * raw.b_factors[j].to_matrix();
    prod = prod * p.b_factors[j].to_matrix();
  }
  CHECK(frobenius_distance(raw_prod, prod) < 1e-12);
}

TEST_CASE("synthesize reconstructs random unitaries with exact counts") {
  for (unsigned n = 1; n <= 6; ++n) {
    const int trials = n <= 4 ? 20 : 4;
    for (int t = 0; t < trials; ++t) {
      const UnitaryMatrix u = haar_random_unitary(n, 7000 + 31 * n + t);
      const SynthesisResult r = synthesize(u);
      CHECK(r.report.reconstruction_error <= 1e-8);
      CHECK(r.report.counts.cnot == expected_cnot_count(n));
      CHECK(r.report.counts.one_qubit == expected_one_qubit_count(n));
      CHECK(count_gates(r.circuit) == r.report.counts);
      CHECK(r.report.expected_cnot == expected_cnot_count(n));
      CHECK(r.report.lower_bound_cnot == cnot_lower_bound(n));
    }
  }
}

TEST_CASE("identity is synthesized exactly") {
  const SynthesisResult r = synthesize(validate_unitary(ComplexMatrix::identity(8)));
  CHECK(r.report.reconstruction_error < 1e-14);
}

TEST_CASE("per-section counts for three qubits") {
  const SynthesisResult r = synthesize(haar_random_unitary(3, 12));
  REQUIRE(r.report.sections.size() == 4);
  CHECK(r.report.sections[0].j == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(r.report.sections[i].j == 4 - i);
  for (const auto &s : r.report.sections) CHECK(s.counts == GateCounts{12, 16});
  CHECK(section_total(r.report) == r.report.counts);
}

TEST_CASE("without mirroring the seams keep their CNOTs") {
  for (unsigned n = 2; n <= 4; ++n) {
    const SynthesisResult r = synthesize(haar_random_unitary(n, 3 * n), {.mirror = false});
    CHECK(r.report.reconstruction_error <= 1e-8);
    CHECK(r.report.counts.cnot == (std::uint64_t{1} << (2 * n)) - 2);
  }
}

TEST_CASE("verification can be skipped") {
  const SynthesisResult r = synthesize(haar_random_unitary(3, 1), {.verify = false});
  CHECK(std::isnan(r.report.reconstruction_error));
}

TEST_CASE("pruning drops zero rotations only") {
  const UnitaryMatrix id = validate_unitary(ComplexMatrix::identity(8));
  const SynthesisResult r = synthesize(id, {.prune_zero = true});
  CHECK(r.report.counts.one_qubit < expected_one_qubit_count(3));
  CHECK(r.report.reconstruction_error < 1e-14);
  const SynthesisResult h = synthesize(haar_random_unitary(3, 2), {.prune_zero = true});
  CHECK(h.report.counts.one_qubit == expected_one_qubit_count(3));
}

TEST_CASE("custom Gray code factory") {
  SynthesisOptions opt;
  opt.gray = [](unsigned bits) {
    // Binary reflected code rotated by one step.
    const GrayCode base = binary_reflected_gray(bits);
    std::vector<std::uint32_t> words(base.words().begin(), base.words().end());
    std::rotate(words.begin(), words.begin() + 1, words.end());
    return GrayCode(bits, words);
  };
  for (unsigned n = 2; n <= 4; ++n) {
    const SynthesisResult r = synthesize(haar_random_unitary(n, 400 + n), opt);
    CHECK(r.report.reconstruction_error <= 1e-8);
    CHECK(r.report.counts.cnot == expected_cnot_count(n));
  }
}

TEST_CASE("diagonal synthesis") {
  std::mt19937_64 rng(6);
  for (unsigned n = 1; n <= 8; ++n) {
    const std::vector<double> ph = testing::random_angles(rng, std::size_t{1} << n);
    const SynthesisResult r = synthesize_diagonal(ph);
    CHECK(r.report.counts.cnot == (std::uint64_t{1} << n) - 2);
    CHECK(r.report.counts.one_qubit == std::uint64_t{1} << n);
    CHECK(r.report.reconstruction_error <= 1e-10);
  }
}
