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

#ifndef EAWMR_BASELINES_HPP_
#define EAWMR_BASELINES_HPP_

#include <vector>

#include "eawmr/channels.hpp"

namespace eawmr {

/// Inputs of the pure weak-measurement-reversal baseline: the two
/// measurement strengths, |beta|^2 of the initial state
/// alpha|00> + beta|11>, and the channel decay amplitudes.
struct WmrParams {
  WmrParams(double p1, double p2, double beta_squared, DecayParams d);

  double p1_bar;
  double p2_bar;
  double beta_sq;
  DecayParams decay;
};

/// Success probability of the weak-measurement-only protocol:
/// gA^2 gB^2 p1 p2 [1 + |beta|^2 (p2 wB^2 + p1 wA^2 + p1 p2 wA^2 wB^2)].
/// Returns the raw formula value; it exceeds 1 outside the weak-strength
/// regime and is intentionally not clamped.
double p_wm(const WmrParams& params);

/// p_wm / p_ew with the gamma^2 factors cancelled analytically. Requires
/// both gammas positive.
double ratio(const WmrParams& params);

struct RatioPoint {
  double t;
  double alpha;
  double ratio;
};

/// Uniform grid over alpha in [0,1] and t in [0,t_max], both qubits
/// following the same decay profile; rows ordered t-outer, alpha-inner.
std::vector<RatioPoint> ratio_grid(double p1_bar, double p2_bar,
                                   int alpha_steps, int t_steps,
                                   const DecayProfile& profile, double t_max);

}  // namespace eawmr

#endif  // EAWMR_BASELINES_HPP_
