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

#include "eawmr/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eawmr/channels.hpp"
#include "eawmr/restoration.hpp"
#include "eawmr/rng.hpp"

namespace eawmr {

Matrix euler_matrix(const EulerUnitary& u) {
  const Complex phase = std::polar(1.0, u.alpha);
  const Complex bm = std::polar(1.0, -u.beta);
  const Complex bp = std::polar(1.0, u.beta);
  const Complex gm = std::polar(1.0, -u.gamma_phase);
  const Complex gp = std::polar(1.0, u.gamma_phase);
  const double c = std::cos(u.delta);
  const double s = std::sin(u.delta);
  return Matrix::from_rows({{phase * bm * c * gm, -phase * bm * s * gp},
                            {phase * bp * s * gm, phase * bp * c * gp}});
}

Matrix rotation(double delta) {
  return euler_matrix(EulerUnitary{0.0, 0.0, 0.0, delta});
}

double p_ew_of_delta(double gamma, double delta) {
  return p_ew(transform(amplitude_damping(gamma), rotation(delta)));
}

SweepCurve::SweepCurve(std::vector<SweepPoint> points)
    : points_(std::move(points)) {
  for (size_t i = 0; i + 1 < points_.size(); ++i)
    if (!(points_[i].delta < points_[i + 1].delta))
      throw InvariantViolation("SweepCurve: deltas must strictly increase");
  for (const SweepPoint& p : points_)
    if (!(p.p_ew >= 0.0 && p.p_ew <= 1.0))
      throw InvariantViolation("SweepCurve: p_ew outside [0,1]");
}

SweepCurve sweep_delta(double gamma, int n_points, double delta_max) {
  if (n_points < 2)
    throw std::invalid_argument("sweep_delta: need at least 2 points");
  if (!(delta_max > 0.0))
    throw std::invalid_argument("sweep_delta: delta_max must be positive");
  std::vector<SweepPoint> points;
  points.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double delta = delta_max * i / (n_points - 1);
    points.push_back(SweepPoint{delta, p_ew_of_delta(gamma, delta)});
  }
  return SweepCurve(std::move(points));
}

double phase_invariance_check(double gamma, int samples, std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("phase_invariance_check: samples must be >= 1");
  const KrausChannel ch = amplitude_damping(gamma);
  SplitMix64 rng(seed);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double max_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    EulerUnitary u;
    u.alpha = kTwoPi * rng.next_double();
    u.beta = kTwoPi * rng.next_double();
    u.gamma_phase = kTwoPi * rng.next_double();
    u.delta = kTwoPi * rng.next_double();
    const double with_phases = p_ew(transform(ch, euler_matrix(u)));
    const double baseline = p_ew(transform(ch, rotation(u.delta)));
    max_dev = std::max(max_dev, std::abs(with_phases - baseline));
  }
  return max_dev;
}

std::vector<double> argmax_delta(const SweepCurve& curve) {
  if (curve.points().empty())
    throw std::invalid_argument("argmax_delta: empty curve");
  double best = 0.0;
  for (const SweepPoint& p : curve.points()) best = std::max(best, p.p_ew);
  std::vector<double> deltas;
  for (const SweepPoint& p : curve.points())
    if (p.p_ew >= best - 1e-12) deltas.push_back(p.delta);
  return deltas;
}

}  // namespace eawmr
