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

#include "zvlab/optimizer.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <vector>

#include <ceres/ceres.h>

namespace zvlab {
namespace {

class WindowTest {
 public:
  explicit WindowTest(const StoppingRule& rule) : rule_(rule) {}

  // Records a value; true once the window criterion is met.
  bool push(double value) {
    history_.push_back(value);
    if (static_cast<int>(history_.size()) > rule_.window + 1) history_.pop_front();
    if (static_cast<int>(history_.size()) <= rule_.window) return false;
    const double scale = std::max(std::abs(value), 1e-300);
    return std::abs(history_.front() - value) < rule_.relative_change * scale;
  }

 private:
  StoppingRule rule_;
  std::deque<double> history_;
};

class CeresObjective final : public ceres::FirstOrderFunction {
 public:
  CeresObjective(const DifferentiableObjective& f, int n) : f_(f), n_(n) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    const Eigen::Map<const Eigen::VectorXd> x(parameters, n_);
    if (gradient == nullptr) {
      cost[0] = f_(x, nullptr);
      return std::isfinite(cost[0]);
    }
    Eigen::VectorXd g(n_);
    cost[0] = f_(x, &g);
    Eigen::Map<Eigen::VectorXd>(gradient, n_) = g;
    return std::isfinite(cost[0]);
  }

  int NumParameters() const override { return n_; }

 private:
  const DifferentiableObjective& f_;
  int n_;
};

class WindowCallback final : public ceres::IterationCallback {
 public:
  explicit WindowCallback(const StoppingRule& rule) : test_(rule) {}

  ceres::CallbackReturnType operator()(const ceres::IterationSummary& summary) override {
    if (test_.push(summary.cost)) {
      met_ = true;
      return ceres::SOLVER_TERMINATE_SUCCESSFULLY;
    }
    return ceres::SOLVER_CONTINUE;
  }

  bool met() const { return met_; }

 private:
  WindowTest test_;
  bool met_ = false;
};

}  // namespace

OptimizeResult minimize_bfgs(const DifferentiableObjective& f, const Eigen::VectorXd& x0,
                             const StoppingRule& rule) {
  const int n = static_cast<int>(x0.size());
  Eigen::VectorXd x = x0;
  ceres::GradientProblem problem(new CeresObjective(f, n));
  WindowCallback callback(rule);
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::BFGS;
  options.max_num_iterations = rule.max_iterations;
  options.function_tolerance = 1e-16;
  options.gradient_tolerance = 1e-14;
  options.parameter_tolerance = 1e-16;
  options.logging_type = ceres::SILENT;
  options.callbacks.push_back(&callback);
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(options, problem, x.data(), &summary);

  OptimizeResult out;
  out.x = x;
  out.value = f(x, nullptr);
  out.iterations = static_cast<int>(summary.iterations.size());
  out.converged = callback.met() || summary.termination_type == ceres::CONVERGENCE;
  return out;
}

OptimizeResult minimize_nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                                    const StoppingRule& rule, double initial_step) {
  const auto n = x0.size();
  std::vector<Eigen::VectorXd> simplex(static_cast<std::size_t>(n + 1), x0);
  for (Eigen::Index i = 0; i < n; ++i) simplex[static_cast<std::size_t>(i + 1)][i] += initial_step;
  std::vector<double> values(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  };

  WindowTest test(rule);
  OptimizeResult out;
  for (int iter = 0; iter < rule.max_iterations; ++iter) {
    sort_simplex();
    out.iterations = iter + 1;
    if (test.push(values[order.front()])) {
      out.converged = true;
      break;
    }
    const std::size_t worst = order.back();
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) centroid += simplex[order[k]];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double f_reflected = f(reflected);
    const double best = values[order.front()];
    const double second_worst = values[order[order.size() - 2]];
    if (f_reflected < best) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < second_worst) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
    const double f_contracted = f(contracted);
    if (f_contracted < std::min(f_reflected, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    // Shrink toward the best vertex.
    const Eigen::VectorXd anchor = simplex[order.front()];
    for (std::size_t k = 1; k < order.size(); ++k) {
      simplex[order[k]] = anchor + 0.5 * (simplex[order[k]] - anchor);
      values[order[k]] = f(simplex[order[k]]);
    }
  }
  sort_simplex();
  out.x = simplex[order.front()];
  out.value = values[order.front()];
  return out;
}

}  // namespace zvlab
