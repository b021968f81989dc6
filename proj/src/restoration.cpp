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

#include "eawmr/restoration.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace eawmr {

namespace {

constexpr double kZeroProb = 1e-15;

}  // namespace

ReversalPovm::ReversalPovm(Matrix success_effect, Matrix discard_effect,
                           double n_const)
    : m1_(std::move(success_effect)),
      m2_(std::move(discard_effect)),
      n_(n_const) {
  if (!m1_.square() || m1_.rows() != m2_.rows() || m2_.rows() != m2_.cols())
    throw DimensionMismatch("ReversalPovm: effects must be square, same dim");
  if (!(n_ > 0.0) || n_ > 1.0 + kTolPsd)
    throw InvariantViolation("ReversalPovm: N must lie in (0, 1], got " +
                             std::to_string(n_));
  const Matrix e1 = dagger(m1_) * m1_;
  const Matrix e2 = dagger(m2_) * m2_;
  if (max_abs_diff(e1 + e2, Matrix::identity(m1_.rows())) > 1e-9)
    throw InvariantViolation("ReversalPovm: effects do not sum to I");
  if (hermitian_eigenvalues(e1).front() < -kTolPsd ||
      hermitian_eigenvalues(e2).front() < -kTolPsd)
    throw InvariantViolation("ReversalPovm: effect not PSD");
}

double normalization_constant(const Matrix& k) {
  if (!k.square())
    throw DimensionMismatch("normalization_constant: matrix not square");
  const std::vector<double> eigs = hermitian_eigenvalues(k * dagger(k));
  return std::sqrt(std::max(eigs.front(), 0.0));
}

bool reversible(const Matrix& k, double tol_inv) {
  const std::vector<double> eigs = hermitian_eigenvalues(k * dagger(k));
  const double lo = std::max(eigs.front(), 0.0);
  const double hi = eigs.back();
  return hi > 0.0 && std::sqrt(lo / hi) >= tol_inv;
}

ReversalPovm build_reversal(const Matrix& k, double tol_inv) {
  if (!k.square())
    throw DimensionMismatch("build_reversal: matrix not square");
  const std::vector<double> eigs = hermitian_eigenvalues(k * dagger(k));
  const double lo = std::max(eigs.front(), 0.0);
  const double hi = eigs.back();
  if (hi <= 0.0 || std::sqrt(lo / hi) < tol_inv)
    throw NotInvertibleError("build_reversal: operator is singular");
  const double n = std::sqrt(lo);

  Matrix m1 = Complex{n, 0.0} * inverse(k, tol_inv);
  // I - M1^dag M1 is PSD by construction: N^2 is the smallest eigenvalue
  // of K K^dag, so N^2 (K K^dag)^{-1} <= I.
  const Matrix gap = Matrix::identity(k.rows()) - dagger(m1) * m1;
  Matrix m2 = hermitian_sqrt(gap);
  return ReversalPovm(std::move(m1), std::move(m2), n);
}

std::vector<double> env_probabilities(const KrausChannel& ch,
                                      const DensityMatrix& rho0) {
  if (ch.dim() != rho0.dim())
    throw DimensionMismatch("env_probabilities: dims differ");
  std::vector<double> probs;
  probs.reserve(ch.size());
  double total = 0.0;
  for (const Matrix& k : ch.ops()) {
    const double p =
        std::max(trace(k * rho0.mat() * dagger(k)).real(), 0.0);
    probs.push_back(p);
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvariantViolation("env_probabilities: outcomes sum to " +
                             std::to_string(total));
  return probs;
}

double p_success_conditional(const Matrix& k, const DensityMatrix& rho0) {
  if (k.rows() != rho0.dim())
    throw DimensionMismatch("p_success_conditional: dims differ");
  if (!reversible(k))
    throw NotInvertibleError("p_success_conditional: singular operator");
  const double n = normalization_constant(k);
  const double p1 = trace(k * rho0.mat() * dagger(k)).real();
  if (p1 < kZeroProb)
    throw ZeroProbabilityError("p_success_conditional: outcome has zero "
                               "probability");
  const double p2 = n * n / p1;

  // Cross-check against tr[R' K rho K^dag R'^dag] / tr[K rho K^dag].
  const Matrix r_prime = Complex{n, 0.0} * inverse(k);
  const Matrix evolved = k * rho0.mat() * dagger(k);
  const double p2_trace =
      trace(r_prime * evolved * dagger(r_prime)).real() / p1;
  if (std::abs(p2 - p2_trace) > 1e-9)
    throw std::logic_error("p_success_conditional: closed form and trace "
                           "expression disagree");
  return std::clamp(p2, 0.0, 1.0);
}

double p_ew(const KrausChannel& ch) {
  double sum = 0.0;
  for (const Matrix& k : ch.ops()) {
    const double n = normalization_constant(k);
    sum += n * n;
  }
  return std::clamp(sum, 0.0, 1.0);
}

DensityMatrix eaec_reverse(const RuDecomposition& ru, int outcome,
                           const DensityMatrix& rho_n) {
  if (outcome < 0 || outcome >= ru.size())
    throw std::invalid_argument("eaec_reverse: outcome index out of range");
  const Complex c = ru.coeffs()[outcome];
  if (std::abs(c) < 1e-12)
    throw ZeroCoefficientError("eaec_reverse: zero coefficient branch");
  // R = U^{-1} / c; U^{-1} = U^dag for a unitary.
  const Matrix r = (1.0 / c) * dagger(ru.unitaries()[outcome]);
  Matrix out = r * rho_n.mat() * dagger(r);
  const double tr = trace(out).real();
  if (tr < kZeroProb)
    throw ZeroProbabilityError("eaec_reverse: reversed state has zero trace");
  out = Complex{1.0 / tr, 0.0} * out;
  return DensityMatrix(std::move(out));
}

ReversalResult apply_reversal(const ReversalPovm& povm,
                              const DensityMatrix& rho) {
  const Matrix& m1 = povm.success_effect();
  if (m1.rows() != rho.dim())
    throw DimensionMismatch("apply_reversal: dims differ");
  Matrix num = m1 * rho.mat() * dagger(m1);
  const double p = trace(num).real();
  if (p < kZeroProb)
    throw ZeroProbabilityError("apply_reversal: success probability is zero");
  num = Complex{1.0 / p, 0.0} * num;
  return ReversalResult{p, DensityMatrix(std::move(num))};
}

RestorationReport analyze_outcome(const KrausChannel& ch, int outcome,
                                  const PureState& psi0) {
  if (outcome < 0 || outcome >= ch.size())
    throw std::invalid_argument("analyze_outcome: outcome index out of range");
  const DensityMatrix rho0 = DensityMatrix::pure(psi0);
  const std::vector<double> probs = env_probabilities(ch, rho0);

  RestorationReport report;
  report.outcome_index = outcome;
  report.p1 = probs[outcome];
  const Matrix& k = ch.op(outcome);
  if (!reversible(k) || report.p1 < kZeroProb) return report;

  report.p2 = p_success_conditional(k, rho0);
  Matrix conditional = k * rho0.mat() * dagger(k);
  conditional = Complex{1.0 / report.p1, 0.0} * conditional;
  const ReversalResult rev = apply_reversal(
      build_reversal(k), DensityMatrix(std::move(conditional)));
  report.restored = rev.restored;
  report.fidelity_to_initial = fidelity(rev.restored, psi0);
  return report;
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim())
    throw DimensionMismatch("fidelity: dims differ");
  Complex acc{0.0, 0.0};
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j)
      acc += std::conj(psi.amp(i)) * rho.mat()(i, j) * psi.amp(j);
  return std::clamp(acc.real(), 0.0, 1.0);
}

}  // namespace eawmr
