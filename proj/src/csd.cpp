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

#include "csdsynth/csd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "csdsynth/errors.hpp"

namespace csdsynth {

namespace {

constexpr double kGaugeCutoff = 1e-12;

double column_norm(const ComplexMatrix &m, std::size_t c) {
  double s = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) s += std::norm(m(r, c));
  return std::sqrt(s);
}

ComplexMatrix permute_columns(
    const ComplexMatrix &m, const std::vector<std::size_t> &perm) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, perm[k]);
  }
  return out;
}

}  // namespace

CSDFactors cs_decompose(const UnitaryMatrix &u) {
  const std::size_t dim = u.dim();
  if (dim < 4) throw ShapeMismatch("cosine-sine split needs dim >= 4");
  const std::size_t h = dim / 2;
  const ComplexMatrix &m = u.matrix();
  const ComplexMatrix x11 = m.block(0, 0, h, h);
  const ComplexMatrix x12 = m.block(0, h, h, h);
  const ComplexMatrix x21 = m.block(h, 0, h, h);
  const ComplexMatrix x22 = m.block(h, h, h, h);

  SvdResult s = svd(x11);
  ComplexMatrix left = std::move(s.left);
  ComplexMatrix right = std::move(s.right);

  // Gauge: push column phases of u11 into u21 (and through it into u12/u22).
  for (std::size_t c = 0; c < h; ++c) {
    for (std::size_t r = 0; r < h; ++r) {
      const double mag = std::abs(left(r, c));
      if (mag <= kGaugeCutoff) continue;
      const Complex fix = std::conj(left(r, c)) / mag;
      for (std::size_t k = 0; k < h; ++k) {
        left(k, c) *= fix;
        right(k, c) *= fix;
      }
      break;
    }
  }

  // Columns of X21 * right are mutually orthogonal with norms sin(theta).
  ComplexMatrix w = x21 * right;
  w *= -1.0;
  std::vector<double> thetas(h);
  for (std::size_t c = 0; c < h; ++c) {
    const double cosine = std::clamp(s.singular_values[c], 0.0, 1.0);
    thetas[c] = std::atan2(column_norm(w, c), cosine);
  }
  std::vector<std::size_t> perm(h);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return thetas[a] < thetas[b];
  });
  left = permute_columns(left, perm);
  right = permute_columns(right, perm);
  w = permute_columns(w, perm);
  std::vector<double> sorted(h);
  for (std::size_t k = 0; k < h; ++k) sorted[k] = thetas[perm[k]];
  thetas = std::move(sorted);

  // Most reliable (largest sine) columns first.
  std::vector<std::size_t> visit(h);
  std::iota(visit.begin(), visit.end(), 0);
  std::reverse(visit.begin(), visit.end());
  const ComplexMatrix u12 = orthonormalize_columns(w, visit);

  const ComplexMatrix y1 = left.adjoint() * x12;
  const ComplexMatrix y2 = u12.adjoint() * x22;
  ComplexMatrix u22(h, h);
  for (std::size_t r = 0; r < h; ++r) {
    const double c = std::cos(thetas[r]);
    const double sn = std::sin(thetas[r]);
    for (std::size_t k = 0; k < h; ++k) {
      u22(r, k) = c * y2(r, k) + sn * y1(r, k);
    }
  }

  CSDFactors f{
      validate_unitary(std::move(left)), validate_unitary(u12),
      validate_unitary(right.adjoint()), validate_unitary(std::move(u22)),
      std::move(thetas)};
  const double residual =
      frobenius_distance(reconstruct_csd(f).matrix(), u.matrix());
  if (!(residual <= 1e-9 * static_cast<double>(dim))) {
    throw ReconstructionFailure(residual);
  }
  return f;
}

UnitaryMatrix reconstruct_csd(const CSDFactors &f) {
  const std::size_t h = f.thetas.size();
  const ComplexMatrix &a = f.u11.matrix();
  const ComplexMatrix &b = f.u12.matrix();
  const ComplexMatrix &c = f.u21.matrix();
  const ComplexMatrix &d = f.u22.matrix();
  // Scale rows of the right factors by cos/sin, then multiply by the left.
  ComplexMatrix cr(h, h), sr(h, h), cd(h, h), sd(h, h);
  for (std::size_t r = 0; r < h; ++r) {
    const double co = std::cos(f.thetas[r]), si = std::sin(f.thetas[r]);
    for (std::size_t k = 0; k < h; ++k) {
      cr(r, k) = co * c(r, k);
      sr(r, k) = si * c(r, k);
      cd(r, k) = co * d(r, k);
      sd(r, k) = si * d(r, k);
    }
  }
  ComplexMatrix out(2 * h, 2 * h);
  out.set_block(0, 0, a * cr);
  out.set_block(0, h, a * sd);
  out.set_block(h, 0, -1.0 * (b * sr));
  out.set_block(h, h, b * cd);
  return validate_unitary(std::move(out));
}

}  // namespace csdsynth
