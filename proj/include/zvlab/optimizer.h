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

#ifndef ZVLAB_OPTIMIZER_H
#define ZVLAB_OPTIMIZER_H

#include <functional>

#include <Eigen/Dense>

namespace zvlab {

/// Stop when the objective changed by less than `relative_change` (relative
/// to its magnitude) over the last `window` iterations, or after
/// `max_iterations`.
struct StoppingRule {
  double relative_change = 1e-10;
  int window = 25;
  int max_iterations = 50000;
};

struct OptimizeResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Objective returning f(x); fills *gradient when non-null.
using DifferentiableObjective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>;
using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Quasi-Newton (BFGS with a Wolfe line search).
OptimizeResult minimize_bfgs(const DifferentiableObjective& f, const Eigen::VectorXd& x0,
                             const StoppingRule& rule = {});

/// Derivative-free Nelder-Mead simplex; `initial_step` sets the simplex size.
OptimizeResult minimize_nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                                    const StoppingRule& rule = {}, double initial_step = 0.1);

}  // namespace zvlab

#endif  // ZVLAB_OPTIMIZER_H
