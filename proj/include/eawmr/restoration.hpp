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

#ifndef EAWMR_RESTORATION_HPP_
#define EAWMR_RESTORATION_HPP_

#include <vector>

#include "eawmr/channels.hpp"
#include "eawmr/linalg.hpp"

namespace eawmr {

/// Two-effect weak measurement that undoes one invertible Kraus operator:
/// the success effect is M1 = N * K^{-1} (N the smallest singular value of
/// K, the largest scale at which K^{-1} fits inside a valid effect) and
/// the discard effect completes the set, M2 = sqrt(I - M1^dag M1).
/// Completeness M1^dag M1 + M2^dag M2 = I and positivity of both effects
/// are checked at construction.
class ReversalPovm {
 public:
  ReversalPovm(Matrix success_effect, Matrix discard_effect, double n_const);

  const Matrix& success_effect() const { return m1_; }
  const Matrix& discard_effect() const { return m2_; }
  double n_const() const { return n_; }

 private:
  Matrix m1_;
  Matrix m2_;
  double n_;
};

/// N = min_i sqrt(lambda_i) over the eigenvalues of K K^dag; 0 for a
/// singular K.
double normalization_constant(const Matrix& k);

/// Whether K supports a reversal at all: smallest singular value over
/// largest at least tol_inv.
bool reversible(const Matrix& k, double tol_inv = kTolInv);

/// Build the reversal POVM for an invertible K. Throws NotInvertibleError
/// when the relative smallest singular value is below tol_inv.
ReversalPovm build_reversal(const Matrix& k, double tol_inv = kTolInv);

/// Outcome distribution of the environment measurement:
/// P_1n = tr[K_n rho0 K_n^dag].
std::vector<double> env_probabilities(const KrausChannel& ch,
                                      const DensityMatrix& rho0);

/// Probability that the weak measurement succeeds given outcome n landed:
/// N^2 / P_1n, cross-checked against the defining trace expression.
double p_success_conditional(const Matrix& k, const DensityMatrix& rho0);

/// Overall success probability of the scheme, sum_n N_n^2. Depends only
/// on the Kraus decomposition, not on the input state.
double p_ew(const KrausChannel& ch);

/// Deterministic reversal for a random-unitary branch: apply
/// U_n^{-1}/c_n and renormalize. Restores the pre-channel state exactly
/// when rho_n came from branch n.
DensityMatrix eaec_reverse(const RuDecomposition& ru, int outcome,
                           const DensityMatrix& rho_n);

struct ReversalResult {
  double success_prob;
  DensityMatrix restored;
};

/// One application of the weak measurement: success probability
/// tr[M1 rho M1^dag] and the renormalized post-measurement state.
ReversalResult apply_reversal(const ReversalPovm& povm,
                              const DensityMatrix& rho);

/// Per-outcome summary of the whole scheme. restored and
/// fidelity_to_initial are present iff the branch operator is invertible
/// and the weak measurement took its success branch.
struct RestorationReport {
  int outcome_index = -1;
  double p1 = 0.0;
  double p2 = 0.0;  // 0 for singular (discard-only) branches
  std::optional<DensityMatrix> restored;
  std::optional<double> fidelity_to_initial;
};

/// Analyze environment outcome n for the initial state psi0: branch
/// probability, conditional success probability, and the restored state
/// after a successful weak measurement.
RestorationReport analyze_outcome(const KrausChannel& ch, int outcome,
                                  const PureState& psi0);

/// <psi| rho |psi>.
double fidelity(const DensityMatrix& rho, const PureState& psi);

}  // namespace eawmr

#endif  // EAWMR_RESTORATION_HPP_
