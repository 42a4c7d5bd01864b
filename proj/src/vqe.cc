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

#include "zvlab/vqe.h"

#include <cmath>
#include <stdexcept>

#include "zvlab/errors.h"
#include "zvlab/grouping.h"
#include "zvlab/pauli_estimator.h"

namespace zvlab {

OptimizerMethod parse_optimizer_method(const std::string& name) {
  if (name == "bfgs" || name == "quasi-newton") return OptimizerMethod::kQuasiNewton;
  if (name == "nelder-mead" || name == "derivative-free") return OptimizerMethod::kDerivativeFree;
  throw ParseError("unknown optimizer method '" + name + "'");
}

std::string to_string(OptimizerMethod m) {
  return m == OptimizerMethod::kQuasiNewton ? "bfgs" : "nelder-mead";
}

VQEResult optimize_noiseless(const HVAnsatz& a, const NoiselessOptions& options, Rng& rng) {
  const int n = a.n_params();
  auto with = [&](const Eigen::VectorXd& x) {
    return HVAnsatz(a.model, a.depth, std::vector<double>(x.data(), x.data() + n));
  };
  const DifferentiableObjective f = [&](const Eigen::VectorXd& x, Eigen::VectorXd* g) {
    if (g == nullptr) return exact_energy(with(x));
    auto eg = energy_and_gradient(with(x));
    *g = eg.gradient;
    return eg.energy;
  };
  const Objective f0 = [&](const Eigen::VectorXd& x) { return exact_energy(with(x)); };

  VQEResult best{a, exact_energy(a), false, 0, -1};
  // Draw every start first so the result does not depend on evaluation order.
  std::vector<Eigen::VectorXd> starts;
  for (int r = 0; r < options.restarts; ++r) {
    Eigen::VectorXd x0(n);
    for (int i = 0; i < n; ++i) x0[i] = rng.uniform(-options.init_half_width, options.init_half_width);
    starts.push_back(x0);
  }
  for (int r = 0; r < options.restarts; ++r) {
    const OptimizeResult res = options.method == OptimizerMethod::kQuasiNewton
                                   ? minimize_bfgs(f, starts[static_cast<std::size_t>(r)], options.rule)
                                   : minimize_nelder_mead(f0, starts[static_cast<std::size_t>(r)], options.rule);
    best.iterations += res.iterations;
    if (res.value < best.energy) {
      best.ansatz = with(res.x);
      best.energy = res.value;
      best.converged = res.converged;
      best.best_restart = r;
    }
  }
  return best;
}

double shot_noise_variance(const HVAnsatz& a, std::int64_t shots) {
  if (shots == kExactShots) return 0.0;
  if (shots < 0) throw std::invalid_argument("shot count must be non-negative");
  const PauliSum h = a.model.as_pauli_sum();
  const MeasurementGroups groups = group_qubitwise(h);
  const double eps = predicted_error(prepare(a), h, groups, ShotPlan::uniform(groups.size(), shots));
  return eps * eps / static_cast<double>(a.n_params());
}

HVAnsatz noisy_gradient_step(const HVAnsatz& a, std::int64_t shots, double delta, Rng& rng) {
  if (!(delta > 0.0)) throw std::invalid_argument("step size must be positive");
  const Eigen::VectorXd f = -energy_and_gradient(a).gradient;
  const double sigma = std::sqrt(shot_noise_variance(a, shots));
  HVAnsatz out = a;
  for (int i = 0; i < a.n_params(); ++i) {
    const double eta = sigma > 0.0 ? sigma * rng.normal() : 0.0;
    out.params[static_cast<std::size_t>(i)] += delta * f[i] + eta;
  }
  return out;
}

HVAnsatz natural_gradient_step(const HVAnsatz& a, double delta, double regularization, bool block_diagonal) {
  const Eigen::VectorXd f = -energy_and_gradient(a).gradient;
  Eigen::MatrixXd s = sr_matrix(a, block_diagonal).entries;
  s.diagonal().array() += regularization;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(s);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive() || ldlt.vectorD().minCoeff() <= 0.0) {
    throw NumericalError("regularized S matrix is singular");
  }
  const Eigen::VectorXd step = ldlt.solve(f);
  if (!step.allFinite()) throw NumericalError("natural-gradient step is not finite");
  HVAnsatz out = a;
  for (int i = 0; i < a.n_params(); ++i) out.params[static_cast<std::size_t>(i)] += delta * step[i];
  return out;
}

DescentTrace descend(HVAnsatz a, const StepFunction& step, double e0, double target, int max_steps) {
  DescentTrace trace;
  auto rel = [&](double e) { return std::abs(e - e0) / std::abs(e0); };
  trace.energies.push_back(exact_energy(a));
  for (int k = 1; k <= max_steps; ++k) {
    if (rel(trace.energies.back()) <= target) {
      trace.iterations_to_target = k - 1;
      break;
    }
    a = step(a);
    trace.energies.push_back(exact_energy(a));
  }
  if (trace.iterations_to_target < 0 && rel(trace.energies.back()) <= target) {
    trace.iterations_to_target = static_cast<int>(trace.energies.size()) - 1;
  }
  return trace;
}

}  // namespace zvlab
