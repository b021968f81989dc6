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

#ifndef EAWMR_OPTIMIZER_HPP_
#define EAWMR_OPTIMIZER_HPP_

#include <cstdint>
#include <vector>

#include "eawmr/linalg.hpp"

namespace eawmr {

/// Euler angles of a 2x2 unitary,
/// V = e^{i alpha} diag(e^{-i beta}, e^{i beta})
///     * [[cos d, -sin d], [sin d, cos d]]
///     * diag(e^{-i gamma}, e^{i gamma}).
struct EulerUnitary {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma_phase = 0.0;
  double delta = 0.0;
};

Matrix euler_matrix(const EulerUnitary& u);

/// Pure rotation, the delta-only slice of the parameterization.
Matrix rotation(double delta);

/// Success probability of the single-qubit dissipative channel after
/// mixing its canonical operators with rotation(delta).
double p_ew_of_delta(double gamma, double delta);

struct SweepPoint {
  double delta;
  double p_ew;
};

/// Sampled curve delta -> P_EW; deltas strictly increasing.
class SweepCurve {
 public:
  explicit SweepCurve(std::vector<SweepPoint> points);

  const std::vector<SweepPoint>& points() const { return points_; }

 private:
  std::vector<SweepPoint> points_;
};

/// Uniform sweep of p_ew_of_delta over [0, delta_max], endpoints included.
SweepCurve sweep_delta(double gamma, int n_points, double delta_max);

/// Numerical check that the phase angles drop out of P_EW: maximum over
/// random Euler tuples of |P_EW(V(a,b,g,d)) - P_EW(V(0,0,0,d))|.
double phase_invariance_check(double gamma, int samples, std::uint64_t seed);

/// All grid deltas whose value ties the curve maximum within 1e-12,
/// ascending.
std::vector<double> argmax_delta(const SweepCurve& curve);

}  // namespace eawmr

#endif  // EAWMR_OPTIMIZER_HPP_
