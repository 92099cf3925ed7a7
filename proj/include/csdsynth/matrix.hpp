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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace csdsynth {

using Complex = std::complex<double>;

/** Unitarity tolerance used when none is given explicitly. */
inline constexpr double kDefaultUnitarityTol = 1e-10;

/**
 * @brief Dense complex matrix stored in row-major order.
 *
 * Plain value type; arithmetic returns new matrices.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(
      std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }
  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix block(
      std::size_t r0, std::size_t c0, std::size_t nrows,
      std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix &b);
  std::vector<Complex> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> values);

  bool all_finite() const;
  double frobenius_norm() const;
  /** Largest entry modulus. */
  double max_abs() const;

  ComplexMatrix &operator+=(const ComplexMatrix &o);
  ComplexMatrix &operator-=(const ComplexMatrix &o);
  ComplexMatrix &operator*=(Complex s);

  friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) =
      default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/** Kronecker product a (x) b. */
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/** Block-diagonal matrix assembled from square blocks. */
ComplexMatrix block_diagonal(std::span<const ComplexMatrix> blocks);

/**
 * @brief A square matrix of power-of-two dimension certified unitary at
 * construction.
 *
 * Only obtainable through validate_unitary(), so holding one implies
 * max|M^dagger M - I| <= tolerance().
 */
class UnitaryMatrix {
 public:
  const ComplexMatrix &matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  unsigned num_qubits() const { return num_qubits_; }
  double tolerance() const { return tol_; }

  operator const ComplexMatrix &() const { return matrix_; }

 private:
  friend UnitaryMatrix validate_unitary(ComplexMatrix m, double tol);
  UnitaryMatrix(ComplexMatrix m, unsigned n, double tol)
      : matrix_(std::move(m)), num_qubits_(n), tol_(tol) {}

  ComplexMatrix matrix_;
  unsigned num_qubits_ = 0;
  double tol_ = 0;
};

/** max|m^dagger m - I|. Requires a square matrix. */
double unitarity_deviation(const ComplexMatrix &m);

/**
 * @brief Certifies m as unitary.
 *
 * @throws NotSquare, NotPowerOfTwo, NotUnitary (carrying the deviation), or
 * Error for non-finite entries.
 */
UnitaryMatrix validate_unitary(
    ComplexMatrix m, double tol = kDefaultUnitarityTol);

/** Returns log2(dim) if dim is a power of two >= 2, otherwise throws
 * NotPowerOfTwo. */
unsigned qubits_for_dim(std::size_t dim);

struct SvdResult {
  ComplexMatrix left;
  std::vector<double> singular_values;  // descending
  ComplexMatrix right;
};

/**
 * @brief Singular value decomposition m = left * diag(s) * right^dagger by
 * one-sided (Hestenes) Jacobi.
 *
 * Columns are rotated pairwise until every off-diagonal Gram element is below
 * 1e-14 relative to the column norms. Left singular vectors belonging to zero
 * singular values are filled in by orthonormal completion, so `left` is
 * always unitary for square input.
 *
 * @throws NoConvergence after 60 sweeps.
 */
SvdResult svd(const ComplexMatrix &m);

/**
 * Orthonormalizes columns of m in the given visiting order using two passes
 * of modified Gram-Schmidt. A column that is zero, or whose norm after
 * projection drops below min_ratio of its original norm, is treated as
 * noise and replaced by the standard basis vector that best survives
 * projection onto the remaining complement.
 */
ComplexMatrix orthonormalize_columns(
    const ComplexMatrix &m, std::span<const std::size_t> order,
    double min_ratio = 0.5);

/** Haar-distributed unitary on n qubits; deterministic in seed. */
UnitaryMatrix haar_random_unitary(unsigned n, std::uint64_t seed);

/** ||a - b||_F. @throws ShapeMismatch */
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace csdsynth
