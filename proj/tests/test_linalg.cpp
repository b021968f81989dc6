// Copyright 2026 The eawmr Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eawmr/linalg.hpp"
#include "test_support.hpp"

using namespace eawmr;
using eawmr::testing::random_hermitian;
using eawmr::testing::random_matrix;

namespace {

const Complex kI{0.0, 1.0};

Matrix sigma_x() { return Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

Matrix diag(std::vector<double> d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("matmul basics") {
  SplitMix64 rng(11);
  const Matrix a = random_matrix(2, 2, rng);
  CHECK(max_abs_diff(Matrix::identity(2) * a, a) == 0.0);
  CHECK(max_abs_diff(sigma_x() * sigma_x(), Matrix::identity(2)) == 0.0);

  const double g = 0.6;
  const Matrix k = Matrix::from_rows({{g, 0.0}, {0.0, 1.0}});
  CHECK(max_abs_diff(k * dagger(k), diag({g * g, 1.0})) < 1e-15);

  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 2), DimensionMismatch);
}

TEST_CASE("dagger") {
  const Matrix a = Matrix::from_rows({{0.0, kI}, {0.0, 0.0}});
  const Matrix expected = Matrix::from_rows({{0.0, 0.0}, {-kI, 0.0}});
  CHECK(max_abs_diff(dagger(a), expected) == 0.0);

  const Matrix h = Matrix::from_rows({{1.0, kI}, {-kI, 2.0}});
  CHECK(max_abs_diff(dagger(h), h) == 0.0);

  SplitMix64 rng(5);
  const Matrix b = random_matrix(3, 2, rng);
  CHECK(max_abs_diff(dagger(dagger(b)), b) == 0.0);
}

TEST_CASE("kron block convention") {
  CHECK(max_abs_diff(kron(Matrix::identity(2), Matrix::identity(2)),
                     Matrix::identity(4)) == 0.0);

  const double ga = 0.6, gb = 0.8;
  const Matrix fa = Matrix::from_rows({{ga, 0.0}, {0.0, 1.0}});
  const Matrix fb = Matrix::from_rows({{gb, 0.0}, {0.0, 1.0}});
  CHECK(max_abs_diff(kron(fa, fb), diag({ga * gb, ga, gb, 1.0})) < 1e-16);

  // diag(a,b) (x) lowering-type factor: w*a lands at (1,0), w*b at (3,2).
  const double a = 1.7, b = 0.3, w = 0.9;
  const Matrix m =
      kron(diag({a, b}), Matrix::from_rows({{0.0, 0.0}, {w, 0.0}}));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == 1 && j == 0)
        CHECK(m(i, j) == Complex{1.53, 0.0});
      else if (i == 3 && j == 2)
        CHECK(m(i, j) == Complex{0.27, 0.0});
      else
        CHECK(m(i, j) == Complex{0.0, 0.0});
    }
}

TEST_CASE("kron mixed-product property") {
  SplitMix64 rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix a = random_matrix(2, 3, rng);
    const Matrix c = random_matrix(3, 2, rng);
    const Matrix b = random_matrix(2, 2, rng);
    const Matrix d = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("inverse examples") {
  CHECK(max_abs_diff(inverse(diag({0.5, 1.0})), diag({2.0, 1.0})) < 1e-15);

  const Matrix singular = Matrix::from_rows({{0.0, 0.0}, {0.8, 0.0}});
  CHECK_THROWS_AS(inverse(singular), SingularError);

  const double ga = 0.6, gb = 0.8;
  const Matrix k1 = diag({ga * gb, ga, gb, 1.0});
  CHECK(max_abs_diff(inverse(k1),
                     diag({1.0 / (ga * gb), 1.0 / ga, 1.0 / gb, 1.0})) <
        1e-14);

  CHECK_THROWS_AS(inverse(Matrix(2, 2)), SingularError);  // zero matrix
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("inverse of random well-conditioned matrices") {
  SplitMix64 rng(7);
  int tested = 0;
  while (tested < 25) {
    const Matrix a = random_matrix(4, 4, rng);
    const auto eigs = hermitian_eigenvalues(dagger(a) * a);
    if (eigs.front() <= 0.0 || eigs.back() / eigs.front() >= 1e6) continue;
    ++tested;
    CHECK(max_abs_diff(inverse(a) * a, Matrix::identity(4)) < 1e-9);
    CHECK(max_abs_diff(a * inverse(a), Matrix::identity(4)) < 1e-9);
  }
}

TEST_CASE("hermitian eigenvalues examples") {
  const auto diag_eigs = hermitian_eigenvalues(diag({0.36, 1.0}));
  CHECK(diag_eigs[0] == 0.36);
  CHECK(diag_eigs[1] == 1.0);

  // trace 1, det 0.09 -> {0.1, 0.9}
  const Matrix h = Matrix::from_rows({{0.18, -0.24}, {-0.24, 0.82}});
  const auto eigs = hermitian_eigenvalues(h);
  CHECK(std::abs(eigs[0] - 0.1) < 1e-14);
  CHECK(std::abs(eigs[1] - 0.9) < 1e-14);

  const auto id_eigs = hermitian_eigenvalues(Matrix::identity(4));
  for (double v : id_eigs) CHECK(v == 1.0);

  // complex off-diagonal: eigenvalues of [[2, i], [-i, 2]] are {1, 3}
  const Matrix hc = Matrix::from_rows({{2.0, kI}, {-kI, 2.0}});
  const auto eigs_c = hermitian_eigenvalues(hc);
  CHECK(std::abs(eigs_c[0] - 1.0) < 1e-14);
  CHECK(std::abs(eigs_c[1] - 3.0) < 1e-14);

  CHECK_THROWS_AS(hermitian_eigenvalues(sigma_x() * diag({2.0, 1.0})),
                  NotHermitianError);
}

TEST_CASE("eigensolver properties on random Hermitian matrices") {
  SplitMix64 rng(13);
  for (int n : {2, 3, 4, 8}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix h = random_hermitian(n, rng);
      const HermitianEigen eig = hermitian_eigen(h);

      double sum = 0.0;
      for (double v : eig.values) sum += v;
      CHECK(std::abs(sum - trace(h).real()) < 1e-10);

      for (size_t i = 0; i + 1 < eig.values.size(); ++i)
        CHECK(eig.values[i] <= eig.values[i + 1]);

      // reconstruction V diag(lambda) V^dag = H
      Matrix lambda(n, n);
      for (int i = 0; i < n; ++i) lambda(i, i) = eig.values[i];
      CHECK(max_abs_diff(eig.vectors * lambda * dagger(eig.vectors), h) <
            1e-12);
      CHECK(max_abs_diff(dagger(eig.vectors) * eig.vectors,
                         Matrix::identity(n)) < 1e-12);
    }
  }
}

TEST_CASE("hermitian sqrt") {
  CHECK(max_abs_diff(hermitian_sqrt(diag({4.0, 1.0})), diag({2.0, 1.0})) <
        1e-14);
  CHECK(max_abs(hermitian_sqrt(Matrix(3, 3))) == 0.0);

  // gap left by reversing K = diag(0.6, 1)
  CHECK(max_abs_diff(hermitian_sqrt(diag({0.0, 0.64})), diag({0.0, 0.8})) <
        1e-14);

  CHECK_THROWS_AS(hermitian_sqrt(diag({-1.0, 1.0})), NotPsdError);

  SplitMix64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = random_matrix(4, 4, rng);
    const Matrix h = a * dagger(a);  // PSD
    const Matrix s = hermitian_sqrt(h);
    CHECK(max_abs_diff(s * s, h) < 1e-10);
    CHECK(is_hermitian(s, 1e-12));
    CHECK(hermitian_eigenvalues(s).front() > -1e-12);
  }
}

TEST_CASE("pure states and density matrices enforce their invariants") {
  CHECK_NOTHROW(PureState({Complex{0.6, 0.0}, Complex{0.0, 0.8}}));
  CHECK_THROWS_AS(PureState({Complex{1.0, 0.0}, Complex{1.0, 0.0}}),
                  InvariantViolation);

  const DensityMatrix rho =
      DensityMatrix::pure(PureState({Complex{0.6, 0.0}, Complex{0.8, 0.0}}));
  CHECK(rho.mat()(0, 1) == Complex{0.48, 0.0});
  CHECK(std::abs(trace(rho.mat()).real() - 1.0) < 1e-15);

  CHECK_THROWS_AS(DensityMatrix(Matrix::from_rows({{0.5, 0.3}, {0.2, 0.5}})),
                  InvariantViolation);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix(diag({0.7, 0.7})),
                  InvariantViolation);  // trace 1.4
  CHECK_THROWS_AS(DensityMatrix(diag({1.5, -0.5})),
                  InvariantViolation);  // negative eigenvalue
  const double nan = std::nan("");
  CHECK_THROWS_AS(DensityMatrix(diag({nan, 1.0})), InvariantViolation);
}
