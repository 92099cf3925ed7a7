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

#include <string>
#include <string_view>

#include "csdsynth/circuit.hpp"

namespace csdsynth {

enum class CircuitFormat { Qasm, Json };

/**
 * Serializes a circuit. Wire indices are 0-based on output (wire = qubit - 1)
 * and angles carry 17 significant digits, so parse_circuit() recovers the
 * exact gate list.
 *
 * qasm-like form:
 *
 *     qubits 3
 *     ry(0.5) q[0];
 *     cx q[0], q[2];
 *     gphase(-0.25);
 */
std::string emit_circuit(const Circuit &c, CircuitFormat format);

/** Inverse of emit_circuit(). `#` starts a comment in the qasm-like form.
 * @throws SyntaxError, UnknownGate, IndexOutOfRange */
Circuit parse_circuit(std::string_view text, CircuitFormat format);

/** Picks Json if the first non-blank character is '{'. */
CircuitFormat detect_circuit_format(std::string_view text);

/** Shortest decimal text that reads back to exactly x (17 significant
 * digits). */
std::string format_real(double x);

}  // namespace csdsynth
