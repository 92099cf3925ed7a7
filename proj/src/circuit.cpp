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

#include "csdsynth/circuit.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "csdsynth/errors.hpp"

namespace csdsynth {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_qubit(unsigned q, unsigned n) {
  if (q < 1 || q > n) {
    throw IndexOutOfRange(
        "qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
  }
}

void check_gate(const Gate &g, unsigned n) {
  std::visit(
      Overloaded{
          [n](const Cnot &x) {
            check_qubit(x.control, n);
            check_qubit(x.target, n);
            if (x.control == x.target) {
              throw IndexOutOfRange("CNOT control equals target");
            }
          },
          [n](const Rot &x) { check_qubit(x.qubit, n); },
          [](const GlobalPhase &) {}},
      g);
}

// Applies g to the rows of a row-major block with `width` columns per
// basis index. A state vector is the width-1 case.
void apply_rows(Complex *data, std::size_t width, unsigned n, const Gate &g) {
  const std::size_t dim = std::size_t{1} << n;
  std::visit(
      Overloaded{
          [&](const Cnot &x) {
            const std::size_t cmask = std::size_t{1} << (n - x.control);
            const std::size_t tmask = std::size_t{1} << (n - x.target);
            for (std::size_t r = 0; r < dim; ++r) {
              if ((r & cmask) && !(r & tmask)) {
                Complex *a = data + r * width;
                Complex *b = data + (r | tmask) * width;
                for (std::size_t k = 0; k < width; ++k) std::swap(a[k], b[k]);
              }
            }
          },
          [&](const Rot &x) {
            const std::size_t mask = std::size_t{1} << (n - x.qubit);
            if (x.axis == Axis::Y) {
              const double c = std::cos(x.angle / 2);
              const double s = std::sin(x.angle / 2);
              for (std::size_t r = 0; r < dim; ++r) {
                if (r & mask) continue;
                Complex *a = data + r * width;
                Complex *b = data + (r | mask) * width;
                for (std::size_t k = 0; k < width; ++k) {
                  const Complex u = a[k], v = b[k];
                  a[k] = c * u + s * v;
                  b[k] = -s * u + c * v;
                }
              }
            } else {
              const Complex up = std::polar(1.0, x.angle / 2);
              const Complex down = std::conj(up);
              for (std::size_t r = 0; r < dim; ++r) {
                const Complex f = (r & mask) ? down : up;
                Complex *a = data + r * width;
                for (std::size_t k = 0; k < width; ++k) a[k] *= f;
              }
            }
          },
          [&](const GlobalPhase &x) {
            const Complex f = std::polar(1.0, x.angle);
            for (std::size_t i = 0; i < dim * width; ++i) data[i] *= f;
          }},
      g);
}

}  // namespace

ComplexMatrix rotation_matrix(Axis axis, double angle) {
  if (axis == Axis::Y) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return ComplexMatrix{{c, s}, {-s, c}};
  }
  return ComplexMatrix{
      {std::polar(1.0, angle / 2), 0.0}, {0.0, std::polar(1.0, -angle / 2)}};
}

Circuit::Circuit(unsigned n) : n_(n) {
  if (n < 1) throw IndexOutOfRange("circuit needs at least one qubit");
}

Circuit::Circuit(unsigned n, GateList gates) : Circuit(n) { append(gates); }

void Circuit::add(const Gate &g) {
  check_gate(g, n_);
  if (std::holds_alternative<GlobalPhase>(g)) {
    if (has_phase_) throw Error("circuit already has a global phase gate");
    has_phase_ = true;
  }
  gates_.push_back(g);
}

void Circuit::append(std::span<const Gate> gates) {
  gates_.reserve(gates_.size() + gates.size());
  for (const auto &g : gates) add(g);
}

std::vector<Complex> apply_gate(std::vector<Complex> state, const Gate &g) {
  const std::size_t len = state.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw ShapeMismatch("state length must be 2^n with n >= 1");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(len));
  try {
    check_gate(g, n);
  } catch (const IndexOutOfRange &e) {
    throw ShapeMismatch(std::string("gate does not fit state: ") + e.what());
  }
  apply_rows(state.data(), 1, n, g);
  return state;
}

void apply_circuit(const Circuit &c, ComplexMatrix &m) {
  if (m.rows() != (std::size_t{1} << c.num_qubits())) {
    throw ShapeMismatch("matrix rows do not match circuit width");
  }
  for (const auto &g : c.gates()) {
    apply_rows(m.data().data(), m.cols(), c.num_qubits(), g);
  }
}

UnitaryMatrix reconstruct(const Circuit &c) {
  auto m = ComplexMatrix::identity(std::size_t{1} << c.num_qubits());
  apply_circuit(c, m);
  return validate_unitary(std::move(m));
}

GateCounts count_gates(std::span<const Gate> gates) {
  GateCounts counts;
  for (const auto &g : gates) {
    if (std::holds_alternative<Cnot>(g)) {
      ++counts.cnot;
    } else {
      ++counts.one_qubit;
    }
  }
  return counts;
}

GateCounts count_gates(const Circuit &c) { return count_gates(c.gates()); }

GateList cancel_adjacent_cnots(std::span<const Gate> gates) {
  GateList out;
  out.reserve(gates.size());
  for (const auto &g : gates) {
    if (std::holds_alternative<Cnot>(g) && !out.empty() && out.back() == g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

Circuit cancel_adjacent_cnots(const Circuit &c) {
  return Circuit(c.num_qubits(), cancel_adjacent_cnots(c.gates()));
}

Circuit prune_zero_rotations(const Circuit &c, double tol) {
  Circuit out(c.num_qubits());
  for (const auto &g : c.gates()) {
    if (const auto *r = std::get_if<Rot>(&g); r && std::abs(r->angle) < tol) {
      continue;
    }
    out.add(g);
  }
  return out;
}

}  // namespace csdsynth
