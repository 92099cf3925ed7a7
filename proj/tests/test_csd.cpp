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
#include <numbers>
#include <random>

#include "csdsynth/csd.hpp"
#include "csdsynth/errors.hpp"
#include "oracles.hpp"

using namespace csdsynth;

namespace {

ComplexMatrix cs_core(const std::vector<double> &thetas) {
  const std::size_t h = thetas.size();
  ComplexMatrix m(2 * h, 2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    m(i, i) = std::cos(thetas[i]);
    m(h + i, h + i) = std::cos(thetas[i]);
    m(i, h + i) = std::sin(thetas[i]);
    m(h + i, i) = -std::sin(thetas[i]);
  }
  return m;
}

ComplexMatrix bd(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::vector<ComplexMatrix> blocks{a, b};
  return block_diagonal(blocks);
}

void check_factors(const UnitaryMatrix &u, const CSDFactors &f, double tol) {
  CHECK(frobenius_distance(reconstruct_csd(f).matrix(), u.matrix()) <= tol);
  CHECK(std::is_sorted(f.thetas.begin(), f.thetas.end()));
  for (double t : f.thetas) {
    CHECK(t >= 0);
    CHECK(t <= std::numbers::pi / 2);
  }
  for (const auto *m : {&f.u11, &f.u12, &f.u21, &f.u22}) {
    CHECK(unitarity_deviation(m->matrix()) <= 1e-10);
  }
}

UnitaryMatrix clustered(std::mt19937_64 &rng, std::size_t dim) {
  // Cosine-sine core with repeated and near-repeated angles between random
  // block-diagonal unitaries.
  const std::size_t h = dim / 2;
  const unsigned qh = qubits_for_dim(h);
  std::vector<double> thetas(h);
  for (std::size_t i = 0; i < h; ++i) {
    thetas[i] = (i % 3 == 0) ? 0.0 : (i % 3 == 1 ? 0.6 : 0.6 + 1e-9 * double(i));
  }
  const ComplexMatrix left = bd(haar_random_unitary(qh, rng()).matrix(), haar_random_unitary(qh, rng()).matrix());
  const ComplexMatrix right = bd(haar_random_unitary(qh, rng()).matrix(), haar_random_unitary(qh, rng()).matrix());
  return validate_unitary(left * cs_core(thetas) * right);
}

}  // namespace

TEST_CASE("identity has zero angles and identity blocks") {
  const CSDFactors f = cs_decompose(validate_unitary(ComplexMatrix::identity(4)));
  CHECK(f.thetas == std::vector<double>{0.0, 0.0});
  for (const auto *m : {&f.u11, &f.u12, &f.u21, &f.u22}) {
    CHECK(frobenius_distance(m->matrix(), ComplexMatrix::identity(2)) < 1e-14);
  }
}

TEST_CASE("pure cosine-sine matrix recovers its angles") {
  const ComplexMatrix core = cs_core({0.3, 0.7});
  const CSDFactors f = cs_decompose(validate_unitary(core));
  REQUIRE(f.thetas.size() == 2);
  CHECK(f.thetas[0] == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(f.thetas[1] == doctest::Approx(0.7).epsilon(1e-13));
  check_factors(validate_unitary(core), f, 1e-13);
}

TEST_CASE("all angles at pi/2") {
  const std::vector<double> t(2, std::numbers::pi / 2);
  const ComplexMatrix core = cs_core(t);
  const UnitaryMatrix id = validate_unitary(ComplexMatrix::identity(2));
  const CSDFactors f{id, id, id, id, t};
  CHECK(frobenius_distance(reconstruct_csd(f).matrix(), core) < 1e-15);
  const CSDFactors back = cs_decompose(validate_unitary(core));
  check_factors(validate_unitary(core), back, 1e-13);
  for (double x : back.thetas) CHECK(x == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
}

TEST_CASE("cosines and sines square to one") {
  const UnitaryMatrix u = haar_random_unitary(3, 11);
  const CSDFactors f = cs_decompose(u);
  for (double t : f.thetas) {
    CHECK(std::abs(std::cos(t) * std::cos(t) + std::sin(t) * std::sin(t) - 1) < 1e-15);
  }
  // The cosines are the singular values of the upper-left quadrant, in
  // descending order since the angles ascend.
  const SvdResult s = svd(u.matrix().block(0, 0, 4, 4));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(std::cos(f.thetas[i]) - s.singular_values[i]) < 1e-12);
  }
}

TEST_CASE("Haar round trip") {
  CHECK_THROWS_AS(cs_decompose(validate_unitary(ComplexMatrix::identity(2))), ShapeMismatch);
  const CSDFactors f8 = cs_decompose(haar_random_unitary(3, 2024));
  CHECK(frobenius_distance(reconstruct_csd(f8).matrix(), haar_random_unitary(3, 2024).matrix()) <= 1e-11);
  for (unsigned n = 2; n <= 8; ++n) {
    const int trials = n <= 5 ? 10 : 2;
    for (int t = 0; t < trials; ++t) {
      const UnitaryMatrix u = haar_random_unitary(n, 1000 * n + t);
      check_factors(u, cs_decompose(u), 1e-10 * double(u.dim()));
    }
  }
}

TEST_CASE("gauge: first sizeable entry of each u11 column is real") {
  const CSDFactors f = cs_decompose(haar_random_unitary(4, 5));
  const ComplexMatrix &l = f.u11.matrix();
  for (std::size_t c = 0; c < l.cols(); ++c) {
    for (std::size_t r = 0; r < l.rows(); ++r) {
      if (std::abs(l(r, c)) > 1e-12) {
        CHECK(std::abs(l(r, c).imag()) < 1e-14);
        CHECK(l(r, c).real() > 0);
        break;
      }
    }
  }
}

TEST_CASE("structured inputs") {
  std::mt19937_64 rng(77);
  for (unsigned n = 2; n <= 6; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const unsigned qh = n - 1;
    const ComplexMatrix a = haar_random_unitary(qh, rng()).matrix();
    const ComplexMatrix b = haar_random_unitary(qh, rng()).matrix();
    ComplexMatrix anti(dim, dim);
    anti.set_block(0, dim / 2, a);
    anti.set_block(dim / 2, 0, b);
    const std::vector<UnitaryMatrix> inputs{
        validate_unitary(ComplexMatrix::identity(dim)),
        validate_unitary(kron(haar_random_unitary(1, rng()).matrix(), a)),
        validate_unitary(kron(a, haar_random_unitary(1, rng()).matrix())),
        validate_unitary(bd(a, b)),
        validate_unitary(anti),
        clustered(rng, dim),
    };
    for (const auto &u : inputs) {
      CSDFactors f = cs_decompose(u);
      check_factors(u, f, 1e-10);
    }
  }
}
