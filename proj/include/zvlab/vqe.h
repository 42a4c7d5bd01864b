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

#ifndef ZVLAB_VQE_H
#define ZVLAB_VQE_H

#include <cstdint>
#include <functional>
#include <vector>

#include "zvlab/hv_ansatz.h"
#include "zvlab/optimizer.h"
#include "zvlab/rng.h"

namespace zvlab {

enum class OptimizerMethod { kDerivativeFree, kQuasiNewton };

OptimizerMethod parse_optimizer_method(const std::string& name);
std::string to_string(OptimizerMethod m);

struct NoiselessOptions {
  OptimizerMethod method = OptimizerMethod::kQuasiNewton;
  int restarts = 8;
  double init_half_width = 0.1;
  StoppingRule rule;
};

struct VQEResult {
  HVAnsatz ansatz;
  double energy = 0.0;
  bool converged = false;
  int iterations = 0;    // summed over restarts
  int best_restart = -1;  // -1: the starting point was never beaten
};

/// Multi-restart minimisation of the exact energy. Restart r starts from
/// theta ~ U[-w, w] drawn from `rng`; the best restart wins, ties by index.
VQEResult optimize_noiseless(const HVAnsatz& a, const NoiselessOptions& options, Rng& rng);

/// Shot count meaning "no shot noise".
inline constexpr std::int64_t kExactShots = 0;

/// Per-component variance of the injected shot noise at M shots per group:
/// predicted_error^2 / N_par on the two-basis TFIM measurement.
double shot_noise_variance(const HVAnsatz& a, std::int64_t shots);

/// theta' = theta + delta f + eta, f = -dE/dtheta, eta ~ N(0, shot_noise_variance).
HVAnsatz noisy_gradient_step(const HVAnsatz& a, std::int64_t shots, double delta, Rng& rng);

/// theta' = theta + delta (S + reg I)^{-1} f.
HVAnsatz natural_gradient_step(const HVAnsatz& a, double delta, double regularization,
                               bool block_diagonal = false);

struct DescentTrace {
  std::vector<double> energies;  // exact energy after each step; [0] is the start
  int iterations_to_target = -1;
};

using StepFunction = std::function<HVAnsatz(const HVAnsatz&)>;

/// Iterates `step` until the exact relative error drops below `target` or
/// `max_steps` is reached.
DescentTrace descend(HVAnsatz a, const StepFunction& step, double e0, double target, int max_steps);

}  // namespace zvlab

#endif  // ZVLAB_VQE_H
