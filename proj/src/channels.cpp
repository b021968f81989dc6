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

#include "eawmr/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace eawmr {

KrausChannel::KrausChannel(int dim, std::vector<Matrix> ops)
    : dim_(dim), ops_(std::move(ops)) {
  if (dim <= 0) throw std::invalid_argument("KrausChannel: dim must be > 0");
  if (ops_.empty())
    throw InvariantViolation("KrausChannel: needs at least one operator");
  for (const Matrix& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_)
      throw DimensionMismatch("KrausChannel: operator is not dim x dim");
    if (!is_finite(k))
      throw InvariantViolation("KrausChannel: non-finite operator entry");
  }
  Matrix sum(dim_, dim_);
  for (const Matrix& k : ops_) sum = sum + dagger(k) * k;
  const double residual = max_abs_diff(sum, Matrix::identity(dim_));
  if (residual > kTolCptp)
    throw InvariantViolation(
        "KrausChannel: trace preservation violated, residual norm " +
        std::to_string(residual));
}

DecayParams::DecayParams(double ga, double gb) : gamma_a(ga), gamma_b(gb) {
  if (!(ga >= 0.0 && ga <= 1.0) || !(gb >= 0.0 && gb <= 1.0))
    throw std::invalid_argument("DecayParams: gamma must lie in [0,1]");
}

double DecayParams::omega_a() const {
  return std::sqrt(1.0 - gamma_a * gamma_a);
}

double DecayParams::omega_b() const {
  return std::sqrt(1.0 - gamma_b * gamma_b);
}

DecayProfile::DecayProfile(double rate) : rate_(rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::invalid_argument("DecayProfile: rate must be positive");
}

double DecayProfile::gamma_at(double t) const {
  if (t < 0.0) throw std::invalid_argument("DecayProfile: negative time");
  return std::exp(-rate_ * t / 2.0);
}

RuDecomposition::RuDecomposition(std::vector<Complex> coeffs,
                                 std::vector<Matrix> unitaries)
    : coeffs_(std::move(coeffs)), unitaries_(std::move(unitaries)) {
  if (coeffs_.size() != unitaries_.size() || coeffs_.empty())
    throw std::invalid_argument("RuDecomposition: coeff/unitary mismatch");
  double sum = 0.0;
  for (const Complex& c : coeffs_) sum += std::norm(c);
  if (std::abs(sum - 1.0) > 1e-10)
    throw InvariantViolation("RuDecomposition: sum |c_n|^2 = " +
                             std::to_string(sum) + " not 1");
  for (const Matrix& u : unitaries_) {
    if (!u.square())
      throw DimensionMismatch("RuDecomposition: unitary not square");
    if (max_abs_diff(dagger(u) * u, Matrix::identity(u.rows())) > 1e-10)
      throw InvariantViolation("RuDecomposition: operator not unitary");
  }
}

KrausChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("amplitude_damping: gamma must lie in [0,1]");
  const double omega = std::sqrt(1.0 - gamma * gamma);
  const Matrix k1 = Matrix::from_rows({{gamma, 0.0}, {0.0, 1.0}});
  const Matrix k2 = Matrix::from_rows({{0.0, 0.0}, {omega, 0.0}});
  return KrausChannel(2, {k1, k2});
}

KrausChannel two_qubit_dissipative(const DecayParams& params) {
  const Matrix ga =
      Matrix::from_rows({{params.gamma_a, 0.0}, {0.0, 1.0}});
  const Matrix gb =
      Matrix::from_rows({{params.gamma_b, 0.0}, {0.0, 1.0}});
  const Matrix wa =
      Matrix::from_rows({{0.0, 0.0}, {params.omega_a(), 0.0}});
  const Matrix wb =
      Matrix::from_rows({{0.0, 0.0}, {params.omega_b(), 0.0}});
  return KrausChannel(
      4, {kron(ga, gb), kron(ga, wb), kron(wa, gb), kron(wa, wb)});
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim())
    throw DimensionMismatch("apply: channel and state dims differ");
  Matrix out(ch.dim(), ch.dim());
  for (const Matrix& k : ch.ops()) out = out + k * rho.mat() * dagger(k);
  return DensityMatrix(std::move(out));
}

KrausChannel transform(const KrausChannel& ch, const Matrix& v) {
  const int m = ch.size();
  if (v.rows() != m || v.cols() != m)
    throw DimensionMismatch("transform: mixing matrix must be " +
                            std::to_string(m) + "x" + std::to_string(m));
  if (max_abs_diff(dagger(v) * v, Matrix::identity(m)) > 1e-10)
    throw NotUnitaryError("transform: mixing matrix is not unitary");
  std::vector<Matrix> mixed;
  mixed.reserve(m);
  for (int n = 0; n < m; ++n) {
    Matrix l(ch.dim(), ch.dim());
    for (int j = 0; j < m; ++j) l = l + v(n, j) * ch.op(j);
    mixed.push_back(std::move(l));
  }
  return KrausChannel(ch.dim(), std::move(mixed));
}

RuDetection detect_ru(const KrausChannel& ch, double tol) {
  const int d = ch.dim();
  std::vector<Complex> coeffs;
  std::vector<Matrix> unitaries;
  coeffs.reserve(ch.size());
  unitaries.reserve(ch.size());

  for (int n = 0; n < ch.size(); ++n) {
    const Matrix& k = ch.op(n);
    if (max_abs(k) <= tol) {
      // Zero operator: c_n = 0 and U_n = I by convention.
      coeffs.emplace_back(0.0);
      unitaries.push_back(Matrix::identity(d));
      continue;
    }
    const Matrix g = dagger(k) * k;
    double scalar = 0.0;
    for (int i = 0; i < d; ++i) scalar += g(i, i).real();
    scalar /= d;
    if (scalar <= 0.0) return {std::nullopt, n};

    Matrix scaled_id(d, d);
    for (int i = 0; i < d; ++i) scaled_id(i, i) = scalar;
    if (max_abs_diff(g, scaled_id) > tol) return {std::nullopt, n};

    const double c = std::sqrt(scalar);
    coeffs.emplace_back(c);
    Matrix u = Complex{1.0 / c, 0.0} * k;
    if (max_abs_diff(dagger(u) * u, Matrix::identity(d)) > 1e-10)
      return {std::nullopt, n};
    unitaries.push_back(std::move(u));
  }
  return {RuDecomposition(std::move(coeffs), std::move(unitaries)), -1};
}

}  // namespace eawmr
