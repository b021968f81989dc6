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

#ifndef EAWMR_MONTECARLO_HPP_
#define EAWMR_MONTECARLO_HPP_

#include <cstdint>
#include <optional>

#include "eawmr/channels.hpp"
#include "eawmr/rng.hpp"

namespace eawmr {

/// One pass of the protocol: environment measurement, then (when the
/// selected branch is invertible) the weak-measurement reversal.
struct TrialOutcome {
  int env_outcome = -1;
  bool attempted_reversal = false;
  bool success = false;
  std::optional<double> fidelity;  // present iff success
};

struct McStats {
  std::int64_t n_trials = 0;
  std::int64_t n_success = 0;
  double empirical_p = 0.0;
  double std_err = 0.0;
  std::optional<double> min_fidelity;  // absent when no trial succeeded
  std::uint64_t seed = 0;
};

/// Run one trial: sample the environment outcome by inverse CDF on one
/// uniform draw, attempt the reversal when the branch operator is
/// invertible, and on success record the fidelity of the restored state
/// to psi0. Draws at most two uniforms from rng.
TrialOutcome run_trial(const KrausChannel& ch, const PureState& psi0,
                       SplitMix64& rng);

/// Aggregate n_trials independent trials. Trial i draws from
/// derived_stream(seed, i), so results are reproducible and independent
/// of execution order.
McStats run(const KrausChannel& ch, const PureState& psi0,
            std::int64_t n_trials, std::uint64_t seed);

}  // namespace eawmr

#endif  // EAWMR_MONTECARLO_HPP_
