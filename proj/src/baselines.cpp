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

#include "eawmr/baselines.hpp"

#include <stdexcept>

namespace eawmr {

namespace {

double in_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
  return x;
}

double bracket(const WmrParams& p) {
  const double wa2 = p.decay.omega_a() * p.decay.omega_a();
  const double wb2 = p.decay.omega_b() * p.decay.omega_b();
  return 1.0 + p.beta_sq * (p.p2_bar * wb2 + p.p1_bar * wa2 +
                            p.p1_bar * p.p2_bar * wa2 * wb2);
}

}  // namespace

WmrParams::WmrParams(double p1, double p2, double beta_squared, DecayParams d)
    : p1_bar(in_unit(p1, "p1_bar")),
      p2_bar(in_unit(p2, "p2_bar")),
      beta_sq(in_unit(beta_squared, "beta_sq")),
      decay(d) {}

double p_wm(const WmrParams& params) {
  const double ga2 = params.decay.gamma_a * params.decay.gamma_a;
  const double gb2 = params.decay.gamma_b * params.decay.gamma_b;
  return ga2 * gb2 * params.p1_bar * params.p2_bar * bracket(params);
}

double ratio(const WmrParams& params) {
  if (params.decay.gamma_a <= 0.0 || params.decay.gamma_b <= 0.0)
    throw ZeroGammaError("ratio: undefined at gamma = 0");
  return params.p1_bar * params.p2_bar * bracket(params);
}

std::vector<RatioPoint> ratio_grid(double p1_bar, double p2_bar,
                                   int alpha_steps, int t_steps,
                                   const DecayProfile& profile,
                                   double t_max) {
  in_unit(p1_bar, "p1_bar");
  in_unit(p2_bar, "p2_bar");
  if (alpha_steps < 2 || t_steps < 2)
    throw std::invalid_argument("ratio_grid: steps must be >= 2");
  if (!(t_max > 0.0))
    throw std::invalid_argument("ratio_grid: t_max must be positive");

  std::vector<RatioPoint> rows;
  rows.reserve(static_cast<size_t>(alpha_steps) * t_steps);
  for (int it = 0; it < t_steps; ++it) {
    const double t = t_max * it / (t_steps - 1);
    const double g = profile.gamma_at(t);
    for (int ia = 0; ia < alpha_steps; ++ia) {
      const double alpha = static_cast<double>(ia) / (alpha_steps - 1);
      const double beta_sq = 1.0 - alpha * alpha;
      const WmrParams params(p1_bar, p2_bar, beta_sq, DecayParams(g, g));
      rows.push_back(RatioPoint{t, alpha, ratio(params)});
    }
  }
  return rows;
}

}  // namespace eawmr
