// Copyright 2026 The zvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZVLAB_PAULI_ESTIMATOR_H
#define ZVLAB_PAULI_ESTIMATOR_H

#include <cstdint>
#include <vector>

#include "zvlab/grouping.h"
#include "zvlab/pauli.h"
#include "zvlab/rng.h"
#include "zvlab/spin.h"
#include "zvlab/state_vector.h"

namespace zvlab {

/// Shots per measurement group; all entries >= 1.
struct ShotPlan {
  std::vector<std::int64_t> shots_per_group;

  static ShotPlan uniform(std::size_t n_groups, std::int64_t shots);
  std::int64_t total() const;
};

struct EnergyEstimate {
  double mean = 0.0;
  double stderr = 0.0;
  std::int64_t shots_used = 0;
};

/// Shot-noise estimate of <H>. Each group gets its own shot record in its
/// rotated basis; every member string is read off that record as a product
/// of +/-1 outcomes. The standard error combines, in quadrature over groups,
/// the sample variance of the per-shot group energy sum_{j in g} h_j P_j.
EnergyEstimate estimate_energy_pauli(const StateVector& s, const PauliSum& h,
                                     const MeasurementGroups& groups, const ShotPlan& plan,
                                     Rng& rng);

/// eps = sqrt(sum_j |h_j|^2 (1 - <P_j>^2) / M_j), each term treated as an
/// independent measurement with M_j the shots of the group holding it.
double predicted_error(const StateVector& s, const PauliSum& h, const MeasurementGroups& groups,
                       const ShotPlan& plan);

/// N_groups x M_per_group x N_iter circuit repetitions.
std::int64_t shot_budget(std::int64_t n_groups, std::int64_t m_per_group, std::int64_t n_iter);

struct RatioEstimate {
  double ratio = 0.0;   // |<x'|psi>|^2 / |<x|psi>|^2
  double stderr = 0.0;
  std::int64_t count_x = 0;
  std::int64_t count_x_prime = 0;
  bool defined = false;  // false when x was never observed
};

/// Ratio of squared amplitudes from Z-basis frequencies, with multinomial
/// error propagation.
RatioEstimate amplitude_ratio_estimate(const StateVector& s, const SpinConfiguration& x,
                                       const SpinConfiguration& x_prime, std::int64_t shots, Rng& rng);

/// Shots at which the relative standard error of the ratio first reaches
/// `target`, found by doubling from `start` (capped at `max_shots`; returns
/// -1 when the cap is hit).
std::int64_t shots_for_relative_error(const StateVector& s, const SpinConfiguration& x,
                                      const SpinConfiguration& x_prime, double target, Rng& rng,
                                      std::int64_t start = 16, std::int64_t max_shots = 1LL << 32);

}  // namespace zvlab

#endif  // ZVLAB_PAULI_ESTIMATOR_H
