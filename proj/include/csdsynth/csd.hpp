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

#include <vector>

#include "csdsynth/matrix.hpp"

namespace csdsynth {

/**
 * @brief One cosine-sine split
 *
 *     u = diag(u11, u12) * [[C, S], [-S, C]] * diag(u21, u22)
 *
 * with C = diag(cos thetas), S = diag(sin thetas), thetas ascending in
 * [0, pi/2].
 */
struct CSDFactors {
  UnitaryMatrix u11, u12, u21, u22;
  std::vector<double> thetas;
};

/**
 * @brief Cosine-sine decomposition of a unitary of dimension >= 4.
 *
 * The upper-left quadrant's SVD gives u11, u21 and the cosines; the sines
 * come from the column norms of X21 u21^dagger, which keeps small angles
 * accurate near theta = 0. u12 is built from those columns (orthonormalized
 * from the largest sine down, completed where they vanish) and u22 from
 * C u12^dagger X22 + S u11^dagger X12.
 *
 * Gauge: the first entry of each u11 column with modulus above 1e-12 is real
 * and nonnegative.
 *
 * @throws NotUnitary, ShapeMismatch when dim < 4, ReconstructionFailure if the
 * product misses the input by more than 1e-9 * dim (Frobenius).
 */
CSDFactors cs_decompose(const UnitaryMatrix &u);

UnitaryMatrix reconstruct_csd(const CSDFactors &f);

}  // namespace csdsynth
