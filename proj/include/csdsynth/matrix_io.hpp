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
#include <vector>

#include "csdsynth/matrix.hpp"

namespace csdsynth {

enum class MatrixFormat { Text, Json };

/**
 * Text form:
 *
 *     dim 2
 *     1,0 0,0
 *     0,0 1,0
 *
 * one `re,im` token per entry, 17 significant digits, `#` comments. JSON
 * form: {"dim": d, "re": [[...]], "im": [[...]]}.
 */
std::string emit_matrix(const ComplexMatrix &m, MatrixFormat format);

/** @throws SyntaxError */
ComplexMatrix parse_matrix(std::string_view text, MatrixFormat format);

MatrixFormat detect_matrix_format(std::string_view text);

/** True if the text starts (after comments) with a `phases <d>` header. */
bool is_phase_list(std::string_view text);

/** `phases d` followed by d whitespace-separated reals. @throws SyntaxError */
std::vector<double> parse_phase_list(std::string_view text);
std::string emit_phase_list(std::span<const double> phases);

/** Phases of a diagonal unitary. @throws NotUnitary if an off-diagonal
 * entry exceeds tol or a diagonal entry is off the unit circle by more than
 * tol. */
std::vector<double> diagonal_phases(const ComplexMatrix &m, double tol);

}  // namespace csdsynth
