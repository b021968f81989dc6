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

#ifndef EAWMR_CHANNELS_HPP_
#define EAWMR_CHANNELS_HPP_

#include <optional>
#include <vector>

#include "eawmr/linalg.hpp"

namespace eawmr {

// Per-entry bound on |sum K^dag K - I| for a valid channel.
inline constexpr double kTolCptp = 1e-10;

/// Trace-preserving operator-sum channel: an ordered set of dim x dim
/// Kraus operators with sum_n K_n^dag K_n = I. Checked at construction.
class KrausChannel {
 public:
  KrausChannel(int dim, std::vector<Matrix> ops);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(ops_.size()); }
  const std::vector<Matrix>& ops() const { return ops_; }
  const Matrix& op(int n) const { return ops_[n]; }

 private:
  int dim_;
  std::vector<Matrix> ops_;
};

/// Decay amplitudes for two independently damped qubits. omega is the
/// complementary amplitude, omega = sqrt(1 - gamma^2) per qubit.
struct DecayParams {
  DecayParams(double ga, double gb);

  double gamma_a;
  double gamma_b;
  double omega_a() const;
  double omega_b() const;
};

/// Markovian decay profile gamma(t) = exp(-rate * t / 2).
class DecayProfile {
 public:
  explicit DecayProfile(double rate);

  double rate() const { return rate_; }
  double gamma_at(double t) const;

 private:
  double rate_;
};

/// A channel whose operators are all scalar multiples of unitaries:
/// K_n = c_n U_n with sum |c_n|^2 = 1.
class RuDecomposition {
 public:
  RuDecomposition(std::vector<Complex> coeffs, std::vector<Matrix> unitaries);

  int size() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const std::vector<Matrix>& unitaries() const { return unitaries_; }

 private:
  std::vector<Complex> coeffs_;
  std::vector<Matrix> unitaries_;
};

struct RuDetection {
  std::optional<RuDecomposition> decomposition;
  // First operator whose K^dag K is not proportional to I; -1 when RU.
  int failing_index = -1;

  bool is_ru() const { return decomposition.has_value(); }
};

/// Single-qubit dissipative channel with K1 = [[gamma,0],[0,1]] and
/// K2 = [[0,0],[omega,0]]. Index 0 is the decaying level.
KrausChannel amplitude_damping(double gamma);

/// The four-operator channel for two qubits coupled to independent baths;
/// each operator is a Kronecker product of single-qubit factors.
KrausChannel two_qubit_dissipative(const DecayParams& params);

/// rho -> sum_n K_n rho K_n^dag.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Mix the decomposition: L_n = sum_m v[n,m] K_m for unitary v. The new
/// operator set represents the same channel.
KrausChannel transform(const KrausChannel& ch, const Matrix& v);

/// Decide whether the channel is random-unitary, operator by operator:
/// K_n^dag K_n must be a scalar multiple of I within tol. The scalar is
/// taken as the mean diagonal entry, then verified entrywise. c_n is
/// returned real non-negative with the phase absorbed into U_n; a zero
/// operator gets c_n = 0 and U_n = I.
RuDetection detect_ru(const KrausChannel& ch, double tol = 1e-10);

}  // namespace eawmr

#endif  // EAWMR_CHANNELS_HPP_
