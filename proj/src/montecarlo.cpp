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

#include "eawmr/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "eawmr/restoration.hpp"

namespace eawmr {

TrialOutcome run_trial(const KrausChannel& ch, const PureState& psi0,
                       SplitMix64& rng) {
  const DensityMatrix rho0 = DensityMatrix::pure(psi0);
  const std::vector<double> probs = env_probabilities(ch, rho0);

  // Environment outcome by inverse CDF on a single draw.
  const double u1 = rng.next_double();
  int outcome = ch.size() - 1;
  double cum = 0.0;
  for (int n = 0; n < ch.size(); ++n) {
    cum += probs[n];
    if (u1 < cum) {
      outcome = n;
      break;
    }
  }

  TrialOutcome trial;
  trial.env_outcome = outcome;
  const Matrix& k = ch.op(outcome);
  if (!reversible(k)) return trial;  // discard branch

  trial.attempted_reversal = true;
  const double p1 = probs[outcome];
  if (p1 <= 0.0) return trial;

  Matrix conditional = k * rho0.mat() * dagger(k);
  conditional = Complex{1.0 / p1, 0.0} * conditional;
  const DensityMatrix rho_n(std::move(conditional));

  const ReversalPovm povm = build_reversal(k);
  const Matrix& m1 = povm.success_effect();
  const double p2 = trace(m1 * rho_n.mat() * dagger(m1)).real();
  const double u2 = rng.next_double();
  if (u2 >= p2) return trial;  // weak measurement discarded the state

  trial.success = true;
  const ReversalResult rev = apply_reversal(povm, rho_n);
  trial.fidelity = fidelity(rev.restored, psi0);
  return trial;
}

McStats run(const KrausChannel& ch, const PureState& psi0,
            std::int64_t n_trials, std::uint64_t seed) {
  if (n_trials < 1)
    throw std::invalid_argument("run: n_trials must be >= 1");

  McStats stats;
  stats.n_trials = n_trials;
  stats.seed = seed;
  for (std::int64_t i = 0; i < n_trials; ++i) {
    SplitMix64 rng = derived_stream(seed, static_cast<std::uint64_t>(i));
    const TrialOutcome trial = run_trial(ch, psi0, rng);
    if (trial.success) {
      ++stats.n_success;
      if (!stats.min_fidelity || *trial.fidelity < *stats.min_fidelity)
        stats.min_fidelity = trial.fidelity;
    }
  }
  const double p = static_cast<double>(stats.n_success) / n_trials;
  stats.empirical_p = p;
  stats.std_err = std::sqrt(p * (1.0 - p) / n_trials);
  return stats;
}

}  // namespace eawmr
