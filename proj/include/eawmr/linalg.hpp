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

#ifndef EAWMR_LINALG_HPP_
#define EAWMR_LINALG_HPP_

#include <complex>
#include <initializer_list>
#include <vector>

#include "eawmr/errors.hpp"

namespace eawmr {

using Complex = std::complex<double>;

// Default tolerances. Comfortably above double-precision noise for the
// matrix sizes handled here (dim <= 8).
inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolTrace = 1e-9;
inline constexpr double kTolPsd = 1e-10;
inline constexpr double kTolInv = 1e-9;  // relative to the largest entry

/// Dense complex matrix, row-major storage. A plain value type: every
/// operation returns a fresh matrix and never modifies its inputs, so
/// values can be shared freely across threads.
class Matrix {
 public:
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Complex& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  Complex& operator()(int i, int j) { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Complex> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix dagger(const Matrix& a);

/// Kronecker product, row-major block convention:
/// result[(i*b.rows+k), (j*b.cols+l)] = a[i,j] * b[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

Complex trace(const Matrix& a);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_finite(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kTolHerm);

/// Inverse by Gaussian elimination with partial pivoting. Throws
/// SingularError when a pivot magnitude, relative to the largest entry of
/// the input, falls below tol_inv.
Matrix inverse(const Matrix& a, double tol_inv = kTolInv);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // unitary; column i pairs with values[i]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations,
/// iterated until every off-diagonal magnitude is below 1e-14 or 100
/// sweeps have run. Throws NotHermitianError when the symmetry check
/// fails at tol_herm.
HermitianEigen hermitian_eigen(const Matrix& h, double tol_herm = kTolHerm);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const Matrix& h,
                                          double tol_herm = kTolHerm);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-tol_psd, 0) are treated as rounding noise and clamped to zero;
/// anything below -tol_psd throws NotPsdError.
Matrix hermitian_sqrt(const Matrix& h, double tol_psd = kTolPsd);

/// Normalized state vector.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& amp(int i) const { return amps_[i]; }

 private:
  std::vector<Complex> amps_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix. All three
/// invariants are checked at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  /// |psi><psi|
  static DensityMatrix pure(const PureState& psi);

  int dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }

 private:
  Matrix mat_;
};

}  // namespace eawmr

#endif  // EAWMR_LINALG_HPP_
