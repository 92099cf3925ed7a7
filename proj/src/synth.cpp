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

#include "csdsynth/synth.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "csdsynth/csd.hpp"
#include "csdsynth/errors.hpp"
#include "csdsynth/ucr.hpp"

namespace csdsynth {

UCRotation AFactor::as_rotation(unsigned n) const {
  UCRotation r{Axis::Y, level, all_other_qubits(level, n), {}};
  r.angles.reserve(thetas.size());
  for (double t : thetas) r.angles.push_back(2 * t);
  return r;
}

void AFactor::apply_left(ComplexMatrix &m, unsigned n) const {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t mask = std::size_t{1} << (n - level);
  for (std::size_t x = 0; x < dim; ++x) {
    if (x & mask) continue;
    const double t = thetas[drop_qubit_bit(x, level, n)];
    const double c = std::cos(t), s = std::sin(t);
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Complex a = m(x, k), b = m(x | mask, k);
      m(x, k) = c * a + s * b;
      m(x | mask, k) = -s * a + c * b;
    }
  }
}

namespace {

// One factor of the recursion: either a block-diagonal unitary with equal
// sized blocks or a cosine-sine factor.
struct Factor {
  bool is_cs = false;
  unsigned level = 0;
  std::vector<ComplexMatrix> blocks;
  std::vector<double> thetas;
};

std::vector<Factor> recurse(const UnitaryMatrix &u, unsigned n) {
  std::vector<Factor> factors{Factor{false, 0, {u.matrix()}, {}}};
  for (unsigned level = 1; level < n; ++level) {
    std::vector<Factor> next;
    next.reserve(2 * factors.size());
    for (auto &f : factors) {
      if (f.is_cs) {
        next.push_back(std::move(f));
        continue;
      }
      Factor left{false, level, {}, {}};
      Factor cs{true, level, {}, {}};
      Factor right{false, level, {}, {}};
      for (auto &b : f.blocks) {
        // Blocks inherit rounding from earlier levels; certify loosely and
        // rely on cs_decompose's own reconstruction check.
        const CSDFactors parts = cs_decompose(validate_unitary(std::move(b), 1e-8));
        left.blocks.push_back(parts.u11.matrix());
        left.blocks.push_back(parts.u12.matrix());
        right.blocks.push_back(parts.u21.matrix());
        right.blocks.push_back(parts.u22.matrix());
        cs.thetas.insert(cs.thetas.end(), parts.thetas.begin(), parts.thetas.end());
      }
      next.push_back(std::move(left));
      next.push_back(std::move(cs));
      next.push_back(std::move(right));
    }
    factors = std::move(next);
  }
  return factors;
}

std::vector<double> negated(std::vector<double> v) {
  for (auto &x : v) x = -x;
  return v;
}

}  // namespace

DecompositionPlan build_plan(const UnitaryMatrix &u, const PlanOptions &options) {
  const unsigned n = u.num_qubits();
  if (n < 2) throw ShapeMismatch("build_plan needs at least two qubits");

  DecompositionPlan plan;
  plan.n = n;
  for (auto &f : recurse(u, n)) {
    if (f.is_cs) {
      const auto position = static_cast<std::uint32_t>(plan.a_factors.size() + 1);
      if (gamma(position, n) != f.level) {
        throw Error("cosine-sine factor landed at an unexpected position");
      }
      plan.a_factors.push_back(AFactor{position, f.level, std::move(f.thetas)});
    } else {
      plan.b_factors.emplace_back(n, std::move(f.blocks));
    }
  }

  if (options.absorb) {
    plan.absorbed = true;
    const std::size_t count = plan.b_factors.size();
    for (std::size_t j = 0; j + 1 < count; ++j) {
      BlockSection section = decompose_bj(plan.b_factors[j], plan.a_factors[j].level);
      const auto phases = expand_phase_pattern(section.pattern, n);
      plan.b_factors[j] = plan.b_factors[j].times_diagonal(phases);
      plan.b_factors[j + 1] = plan.b_factors[j + 1].diagonal_times(negated(phases));
      plan.sections.push_back(std::move(section));
    }
    plan.last = decompose_last_block(plan.b_factors.back());
    plan.diagonal = decompose_diagonal(plan.last->phases);
  }

  if (options.verify) {
    const double residual = frobenius_distance(plan_product(plan), u.matrix());
    if (!(residual <= 1e-9)) throw PlanVerificationFailure(residual);
  }
  return plan;
}

ComplexMatrix plan_product(const DecompositionPlan &plan) {
  const std::size_t dim = std::size_t{1} << plan.n;
  auto m = ComplexMatrix::identity(dim);
  for (std::size_t j = plan.b_factors.size(); j-- > 0;) {
    plan.b_factors[j].apply_left(m);
    if (j > 0) plan.a_factors[j - 1].apply_left(m, plan.n);
  }
  return m;
}

std::uint64_t expected_cnot_count(unsigned n) {
  if (n < 2) return 0;
  return (std::uint64_t{1} << (2 * n)) - (std::uint64_t{1} << (n + 1));
}

std::uint64_t expected_one_qubit_count(unsigned n) {
  return std::uint64_t{1} << (2 * n);
}

std::uint64_t cnot_lower_bound(unsigned n) {
  const std::uint64_t numerator = (std::uint64_t{1} << (2 * n)) - 3 * n - 1;
  return (numerator + 3) / 4;
}

namespace {

class Emitter {
 public:
  Emitter(const SynthesisOptions &options) : options_(options) {}

  GateList fragment(const UCRotation &f, bool mirrored) const {
    if (f.controls.empty()) return {Rot{f.axis, f.target, f.angles.at(0)}};
    const auto bits = static_cast<unsigned>(f.num_controls());
    const GrayCode code =
        options_.gray ? options_.gray(bits) : binary_reflected_gray(bits);
    return mirrored && options_.mirror ? expand_ucr_mirrored(f, code)
                                       : expand_ucr(f, code);
  }

  void add(GateList &out, const UCRotation &f, bool mirrored) const {
    const GateList g = fragment(f, mirrored);
    out.insert(out.end(), g.begin(), g.end());
  }

 private:
  const SynthesisOptions &options_;
};

using Clock = std::chrono::steady_clock;

void finish(
    SynthesisResult &result, const ComplexMatrix &target,
    const SynthesisOptions &options, Clock::time_point start) {
  if (options.prune_zero) {
    result.circuit =
        cancel_adjacent_cnots(prune_zero_rotations(result.circuit));
  }
  result.report.counts = count_gates(result.circuit);
  if (options.verify) {
    auto m = ComplexMatrix::identity(target.rows());
    apply_circuit(result.circuit, m);
    result.report.reconstruction_error = frobenius_distance(m, target);
  } else {
    result.report.reconstruction_error =
        std::numeric_limits<double>::quiet_NaN();
  }
  result.report.elapsed = Clock::now() - start;
}

}  // namespace

SynthesisResult synthesize(
    const UnitaryMatrix &u, const SynthesisOptions &options) {
  const auto start = Clock::now();
  const unsigned n = u.num_qubits();
  SynthesisResult result{Circuit(n), {}};
  result.report.expected_cnot = expected_cnot_count(n);
  result.report.expected_one_qubit = expected_one_qubit_count(n);
  result.report.lower_bound_cnot = cnot_lower_bound(n);

  if (n == 1) {
    const ZYZAngles a = zyz_decompose(u.matrix());
    result.circuit.append(GateList{
        Rot{Axis::Z, 1, a.z2}, Rot{Axis::Y, 1, a.y}, Rot{Axis::Z, 1, a.z1},
        GlobalPhase{a.phase}});
    result.report.sections.push_back({1, count_gates(result.circuit)});
    finish(result, u.matrix(), options, start);
    return result;
  }

  const DecompositionPlan plan = build_plan(u, {true, options.verify});
  const Emitter emit(options);
  const auto last_j = static_cast<std::uint32_t>(plan.b_factors.size());

  GateList last{GlobalPhase{plan.diagonal->global_phase}};
  for (const auto &f : plan.diagonal->cascade) emit.add(last, f, false);
  emit.add(last, plan.last->z_n2, false);
  emit.add(last, plan.last->y_n, false);
  emit.add(last, plan.last->z_n, true);
  last = cancel_adjacent_cnots(last);
  result.report.sections.push_back({last_j, count_gates(last)});
  result.circuit.append(last);

  for (std::uint32_t j = last_j - 1; j >= 1; --j) {
    const BlockSection &s = plan.sections[j - 1];
    GateList gates;
    emit.add(gates, plan.a_factors[j - 1].as_rotation(n), false);
    emit.add(gates, s.z_level, true);
    emit.add(gates, s.y_n, false);
    emit.add(gates, s.z_n, true);
    gates = cancel_adjacent_cnots(gates);
    result.report.sections.push_back({j, count_gates(gates)});
    result.circuit.append(gates);
  }

  finish(result, u.matrix(), options, start);
  return result;
}

SynthesisResult synthesize_diagonal(
    std::span<const double> phases, const SynthesisOptions &options) {
  const auto start = Clock::now();
  const DiagonalCascade d = decompose_diagonal(phases);
  const auto n = static_cast<unsigned>(std::countr_zero(phases.size()));
  SynthesisResult result{Circuit(n), {}};
  result.report.expected_cnot = (std::uint64_t{1} << n) - 2;
  result.report.expected_one_qubit = std::uint64_t{1} << n;
  result.report.lower_bound_cnot = cnot_lower_bound(n);

  const Emitter emit(options);
  GateList gates{GlobalPhase{d.global_phase}};
  for (const auto &f : d.cascade) emit.add(gates, f, false);
  result.circuit.append(cancel_adjacent_cnots(gates));
  result.report.sections.push_back({1, count_gates(result.circuit)});

  std::vector<Complex> diag(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    diag[i] = std::polar(1.0, phases[i]);
  }
  finish(result, ComplexMatrix::diagonal(diag), options, start);
  return result;
}

}  // namespace csdsynth
