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

#include "eawmr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace eawmr {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, "Matrix: dimensions must be positive");
  data_.assign(static_cast<size_t>(rows) * cols, Complex{0.0, 0.0});
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  require(rows.size() > 0, "Matrix::from_rows: no rows");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  Matrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == c,
            "Matrix::from_rows: ragged rows");
    int j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matmul: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator*(Complex s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix add: shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sub: shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix dagger(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Complex trace(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("trace: matrix not square");
  Complex t{0.0, 0.0};
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

bool is_finite(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (!a.square()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

Matrix inverse(const Matrix& a, double tol_inv) {
  if (!a.square()) throw DimensionMismatch("inverse: matrix not square");
  const int n = a.rows();
  const double scale = max_abs(a);
  if (scale == 0.0) throw SingularError("inverse: zero matrix");

  // Gauss-Jordan on [work | out] with partial pivoting.
  Matrix work = a;
  Matrix out = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(work(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::abs(work(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best < tol_inv * scale)
      throw SingularError("inverse: pivot " + std::to_string(col) +
                          " below tolerance");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(out(col, j), out(pivot, j));
      }
    }
    const Complex inv_p = 1.0 / work(col, col);
    for (int j = 0; j < n; ++j) {
      work(col, j) *= inv_p;
      out(col, j) *= inv_p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        out(r, j) -= f * out(col, j);
      }
    }
  }
  return out;
}

HermitianEigen hermitian_eigen(const Matrix& h, double tol_herm) {
  if (!h.square()) throw DimensionMismatch("hermitian_eigen: not square");
  if (!is_hermitian(h, tol_herm))
    throw NotHermitianError("hermitian_eigen: symmetry check failed");

  const int n = h.rows();
  // Symmetrize exactly so rounding in the input cannot bias the rotations.
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = Complex{h(i, i).real(), 0.0};
    for (int j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  Matrix v = Matrix::identity(n);

  constexpr double kOffTol = 1e-14;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(a(i, j)));
    if (off < kOffTol) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double ab = std::abs(b);
        if (ab < kOffTol) continue;

        // Phase factor realifies the (p,q) subproblem, then a standard
        // real rotation annihilates it.
        const Complex f = b / ab;           // e^{i phi}
        const Complex fc = std::conj(f);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * ab);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Column update A <- A*J with J_pp=c, J_pq=s, J_qp=-s*fc, J_qq=c*fc.
        for (int k = 0; k < n; ++k) {
          const Complex x = a(k, p);
          const Complex y = a(k, q);
          a(k, p) = c * x - s * fc * y;
          a(k, q) = s * x + c * fc * y;
        }
        // Row update A <- J^dag * A.
        for (int k = 0; k < n; ++k) {
          const Complex x = a(p, k);
          const Complex y = a(q, k);
          a(p, k) = c * x - s * f * y;
          a(q, k) = s * x + c * f * y;
        }
        // The rotation annihilates (p,q) exactly; clear the residue.
        a(p, q) = Complex{0.0, 0.0};
        a(q, p) = Complex{0.0, 0.0};
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};

        for (int k = 0; k < n; ++k) {
          const Complex x = v(k, p);
          const Complex y = v(k, q);
          v(k, p) = c * x - s * fc * y;
          v(k, q) = s * x + c * fc * y;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen eig{std::vector<double>(n), Matrix(n, n)};
  for (int col = 0; col < n; ++col) {
    eig.values[col] = a(order[col], order[col]).real();
    for (int row = 0; row < n; ++row)
      eig.vectors(row, col) = v(row, order[col]);
  }
  return eig;
}

std::vector<double> hermitian_eigenvalues(const Matrix& h, double tol_herm) {
  return hermitian_eigen(h, tol_herm).values;
}

Matrix hermitian_sqrt(const Matrix& h, double tol_psd) {
  const HermitianEigen eig = hermitian_eigen(h);
  const int n = h.rows();
  std::vector<double> roots(n);
  for (int i = 0; i < n; ++i) {
    if (eig.values[i] < -tol_psd)
      throw NotPsdError("hermitian_sqrt: eigenvalue " +
                        std::to_string(eig.values[i]) + " below -tol_psd");
    roots[i] = std::sqrt(std::max(eig.values[i], 0.0));
  }
  // S = V diag(sqrt(lambda)) V^dag, resymmetrized.
  Matrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < n; ++k)
        acc += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
      s(i, j) = acc;
    }
  for (int i = 0; i < n; ++i) {
    s(i, i) = Complex{s(i, i).real(), 0.0};
    for (int j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (s(i, j) + std::conj(s(j, i)));
      s(i, j) = m;
      s(j, i) = std::conj(m);
    }
  }
  return s;
}

PureState::PureState(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  require(!amps_.empty(), "PureState: empty amplitude vector");
  double norm_sq = 0.0;
  for (const Complex& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvariantViolation("PureState: non-finite amplitude");
    norm_sq += std::norm(z);
  }
  if (std::abs(norm_sq - 1.0) > kTolTrace)
    throw InvariantViolation("PureState: squared norm " +
                             std::to_string(norm_sq) + " not 1");
}

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
  if (!mat_.square())
    throw DimensionMismatch("DensityMatrix: matrix not square");
  if (!is_finite(mat_))
    throw InvariantViolation("DensityMatrix: non-finite entry");
  if (!is_hermitian(mat_, kTolHerm))
    throw InvariantViolation("DensityMatrix: not Hermitian");
  const double tr = trace(mat_).real();
  if (std::abs(tr - 1.0) > kTolTrace)
    throw InvariantViolation("DensityMatrix: trace " + std::to_string(tr) +
                             " not 1");
  const std::vector<double> eigs = hermitian_eigenvalues(mat_);
  if (eigs.front() < -kTolPsd)
    throw InvariantViolation("DensityMatrix: eigenvalue " +
                             std::to_string(eigs.front()) + " below -tol_psd");
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  const int n = psi.dim();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = psi.amp(i) * std::conj(psi.amp(j));
  return DensityMatrix(std::move(m));
}

}  // namespace eawmr
