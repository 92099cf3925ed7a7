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

#include "csdsynth/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "csdsynth/errors.hpp"

namespace csdsynth {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(
    std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ShapeMismatch("entry count does not match rows * cols");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged initializer list");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::block(
    std::size_t r0, std::size_t c0, std::size_t nrows,
    std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw ShapeMismatch("block exceeds matrix bounds");
  }
  ComplexMatrix out(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    std::copy_n(
        data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0),
        ncols, out.data_.begin() + static_cast<std::ptrdiff_t>(r * ncols));
  }
  return out;
}

void ComplexMatrix::set_block(
    std::size_t r0, std::size_t c0, const ComplexMatrix &b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw ShapeMismatch("block exceeds matrix bounds");
  }
  for (std::size_t r = 0; r < b.rows_; ++r) {
    std::copy_n(
        b.data_.begin() + static_cast<std::ptrdiff_t>(r * b.cols_), b.cols_,
        data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0));
  }
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> values) {
  if (values.size() != rows_) throw ShapeMismatch("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0;
  for (const auto &z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
  double best = 0;
  for (const auto &z : data_) best = std::max(best, std::abs(z));
  return best;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
  for (auto &z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
  return a += b;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
  return a -= b;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("operator*");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix block_diagonal(std::span<const ComplexMatrix> blocks) {
  std::size_t dim = 0;
  for (const auto &b : blocks) {
    if (!b.is_square()) throw NotSquare("block_diagonal needs square blocks");
    dim += b.rows();
  }
  ComplexMatrix out(dim, dim);
  std::size_t offset = 0;
  for (const auto &b : blocks) {
    out.set_block(offset, offset, b);
    offset += b.rows();
  }
  return out;
}

unsigned qubits_for_dim(std::size_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw NotPowerOfTwo(
        "dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  unsigned n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

double unitarity_deviation(const ComplexMatrix &m) {
  if (!m.is_square()) throw NotSquare("unitarity check needs a square matrix");
  const std::size_t d = m.rows();
  double worst = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Complex dot{};
      for (std::size_t k = 0; k < d; ++k) dot += std::conj(m(k, i)) * m(k, j);
      if (i == j) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

UnitaryMatrix validate_unitary(ComplexMatrix m, double tol) {
  if (!m.is_square()) {
    throw NotSquare(
        "matrix is " + std::to_string(m.rows()) + "x" +
        std::to_string(m.cols()));
  }
  const unsigned n = qubits_for_dim(m.rows());
  if (!m.all_finite()) throw Error("matrix has non-finite entries");
  const double dev = unitarity_deviation(m);
  if (!(dev <= tol)) throw NotUnitary(dev);
  return UnitaryMatrix(std::move(m), n, tol);
}

namespace {

using Column = std::vector<Complex>;

Complex inner(const Column &a, const Column &b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(const Column &a) {
  double s = 0;
  for (const auto &z : a) s += std::norm(z);
  return std::sqrt(s);
}

void project_out(Column &v, const std::vector<const Column *> &basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Column *q : basis) {
      const Complex c = inner(*q, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * (*q)[i];
    }
  }
}

}  // namespace

ComplexMatrix orthonormalize_columns(
    const ComplexMatrix &m, std::span<const std::size_t> order,
    double min_ratio) {
  const std::size_t rows = m.rows();
  std::vector<Column> out(m.cols());
  std::vector<const Column *> filled;
  std::vector<std::size_t> pending;
  for (std::size_t c : order) {
    Column v = m.column(c);
    const double original = norm2(v);
    project_out(v, filled);
    const double residual = norm2(v);
    if (original == 0 || !(residual > min_ratio * original)) {
      pending.push_back(c);
      continue;
    }
    for (auto &z : v) z /= residual;
    out[c] = std::move(v);
    filled.push_back(&out[c]);
  }
  // Completion: take the standard basis vector that survives projection
  // best, preferring e_c on ties so that trivial inputs stay trivial.
  std::sort(pending.begin(), pending.end());
  for (std::size_t c : pending) {
    Column best;
    double best_norm = 0;
    for (std::size_t t = 0; t < rows; ++t) {
      const std::size_t e = (c + t) % rows;
      Column v(rows);
      v[e] = 1.0;
      project_out(v, filled);
      const double residual = norm2(v);
      if (residual > best_norm + 1e-9) {
        best_norm = residual;
        best = std::move(v);
      }
    }
    if (!(best_norm > 0.1)) throw Error("orthonormal completion failed");
    for (auto &z : best) z /= best_norm;
    out[c] = std::move(best);
    filled.push_back(&out[c]);
  }
  ComplexMatrix q(rows, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) q.set_column(c, out[c]);
  return q;
}

SvdResult svd(const ComplexMatrix &m) {
  if (!m.all_finite()) throw Error("svd input has non-finite entries");
  if (m.rows() < m.cols()) {
    SvdResult t = svd(m.adjoint());
    return {std::move(t.right), std::move(t.singular_values),
            std::move(t.left)};
  }
  constexpr unsigned kMaxSweeps = 60;
  constexpr double kTol = 1e-14;
  const std::size_t n = m.cols();
  std::vector<Column> a(n), v(n, Column(n));
  for (std::size_t c = 0; c < n; ++c) {
    a[c] = m.column(c);
    v[c][c] = 1.0;
  }

  bool converged = false;
  for (unsigned sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0, beta = 0;
        for (const auto &z : a[p]) alpha += std::norm(z);
        for (const auto &z : a[q]) beta += std::norm(z);
        const Complex g = inner(a[p], a[q]);
        const double gabs = std::abs(g);
        if (gabs <= kTol * std::sqrt(alpha * beta) || gabs < 1e-300) continue;
        converged = false;
        // Rotate the phase out of g, then apply a real Jacobi rotation.
        const Complex phase = std::conj(g) / gabs;
        const double zeta = (beta - alpha) / (2.0 * gabs);
        const double t = (zeta >= 0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        auto rotate = [&](Column &x, Column &y) {
          for (std::size_t i = 0; i < x.size(); ++i) {
            const Complex xp = x[i];
            const Complex yq = y[i] * phase;
            x[i] = cs * xp - sn * yq;
            y[i] = sn * xp + cs * yq;
          }
        };
        rotate(a[p], a[q]);
        rotate(v[p], v[q]);
      }
    }
  }
  if (!converged) throw NoConvergence(kMaxSweeps);

  std::vector<double> sigma(n);
  for (std::size_t c = 0; c < n; ++c) sigma[c] = norm2(a[c]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sigma[x] > sigma[y];
  });

  SvdResult result{
      ComplexMatrix(m.rows(), n), std::vector<double>(n), ComplexMatrix(n, n)};
  ComplexMatrix scaled(m.rows(), n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t c = order[k];
    result.singular_values[k] = sigma[c];
    Column u = a[c];
    if (sigma[c] > 0) {
      for (auto &z : u) z /= sigma[c];
    }
    scaled.set_column(k, u);
    result.right.set_column(k, v[c]);
  }
  std::vector<std::size_t> visit(n);
  std::iota(visit.begin(), visit.end(), 0);
  result.left = orthonormalize_columns(scaled, visit);
  return result;
}

UnitaryMatrix haar_random_unitary(unsigned n, std::uint64_t seed) {
  if (n < 1 || n > 12) throw Error("haar_random_unitary needs 1 <= n <= 12");
  const std::size_t dim = std::size_t{1} << n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(dim, dim);
  for (auto &z : g.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  // Gram-Schmidt QR leaves a positive real diagonal in R, which is the phase
  // fixing that makes Q Haar distributed.
  std::vector<std::size_t> visit(dim);
  std::iota(visit.begin(), visit.end(), 0);
  return validate_unitary(orthonormalize_columns(g, visit, 1e-8));
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("frobenius_distance operands differ in shape");
  }
  double sum = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    sum += std::norm(a.data()[i] - b.data()[i]);
  }
  return std::sqrt(sum);
}

}  // namespace csdsynth
