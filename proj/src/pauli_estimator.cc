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

#include "zvlab/pauli_estimator.h"

#include <bit>
#include <cmath>

#include "zvlab/errors.h"

namespace zvlab {

ShotPlan ShotPlan::uniform(std::size_t n_groups, std::int64_t shots) {
  if (shots < 1) throw std::invalid_argument("shots per group must be at least 1");
  return ShotPlan{std::vector<std::int64_t>(n_groups, shots)};
}

std::int64_t ShotPlan::total() const {
  std::int64_t t = 0;
  for (const auto m : shots_per_group) t += m;
  return t;
}

EnergyEstimate estimate_energy_pauli(const StateVector& s, const PauliSum& h,
                                     const MeasurementGroups& groups, const ShotPlan& plan,
                                     Rng& rng) {
  if (h.n_qubits() != s.n_qubits()) throw DimensionError("operator size does not match the state");
  if (plan.shots_per_group.size() != groups.size()) {
    throw DimensionError("shot plan must have one entry per measurement group");
  }
  if (h.max_imag() > 1e-10) throw HermiticityError("Pauli estimator needs real coefficients");

  EnergyEstimate out;
  out.mean = h.identity_coeff().real();
  double variance = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::int64_t shots = plan.shots_per_group[g];
    if (shots < 1) throw std::invalid_argument("shots per group must be at least 1");
    const auto& members = groups.groups[g];
    const StateVector rotated = rotate_to_basis(s, groups.bases[g]);
    const BasisSampler sampler(rotated);
    // Per-shot group energy; Welford accumulation.
    double mean = 0.0, m2 = 0.0;
    std::int64_t count = 0;
    for (std::int64_t shot = 0; shot < shots; ++shot) {
      const auto b = sampler.draw(rng);
      double e = 0.0;
      for (const auto j : members) {
        const auto& term = h.terms()[j];
        const int parity = std::popcount(b & term.string.support()) & 1;
        e += term.coeff.real() * (parity ? -1.0 : 1.0);
      }
      ++count;
      const double delta = e - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (e - mean);
    }
    out.mean += mean;
    if (shots > 1) variance += m2 / static_cast<double>(shots - 1) / static_cast<double>(shots);
    out.shots_used += shots;
  }
  out.stderr = std::sqrt(variance);
  return out;
}

double predicted_error(const StateVector& s, const PauliSum& h, const MeasurementGroups& groups,
                       const ShotPlan& plan) {
  if (plan.shots_per_group.size() != groups.size()) {
    throw DimensionError("shot plan must have one entry per measurement group");
  }
  double total = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto j : groups.groups[g]) {
      const auto& term = h.terms()[j];
      const double mean_p = expectation(s, PauliSum(h.n_qubits(), {{cplx(1.0, 0.0), term.string}}));
      const double var_p = std::max(0.0, 1.0 - mean_p * mean_p);
      total += std::norm(term.coeff) * var_p / static_cast<double>(plan.shots_per_group[g]);
    }
  }
  return std::sqrt(total);
}

std::int64_t shot_budget(std::int64_t n_groups, std::int64_t m_per_group, std::int64_t n_iter) {
  return n_groups * m_per_group * n_iter;
}

RatioEstimate amplitude_ratio_estimate(const StateVector& s, const SpinConfiguration& x,
                                       const SpinConfiguration& x_prime, std::int64_t shots, Rng& rng) {
  if (x.length() != s.n_qubits() || x_prime.length() != s.n_qubits()) {
    throw DimensionError("configuration length does not match the state");
  }
  if (shots < 1) throw std::invalid_argument("shot count must be at least 1");
  RatioEstimate out;
  const BasisSampler sampler(s);
  for (std::int64_t i = 0; i < shots; ++i) {
    const auto b = sampler.draw(rng);
    if (b == x.index()) ++out.count_x;
    if (b == x_prime.index()) ++out.count_x_prime;
  }
  if (out.count_x == 0) return out;
  out.defined = true;
  out.ratio = static_cast<double>(out.count_x_prime) / static_cast<double>(out.count_x);
  if (x == x_prime) return out;
  const double m = static_cast<double>(shots);
  const double n = static_cast<double>(out.count_x);
  const double n_prime = static_cast<double>(out.count_x_prime);
  if (out.count_x_prime == 0) {
    // No resolution below one count in the numerator.
    out.stderr = 1.0 / n;
    return out;
  }
  // Var(log r) = (1-p')/(M p') + (1-p)/(M p) + 2/M for multinomial counts.
  const double rel2 = (1.0 - n_prime / m) / n_prime + (1.0 - n / m) / n + 2.0 / m;
  out.stderr = out.ratio * std::sqrt(rel2);
  return out;
}

std::int64_t shots_for_relative_error(const StateVector& s, const SpinConfiguration& x,
                                      const SpinConfiguration& x_prime, double target, Rng& rng,
                                      std::int64_t start, std::int64_t max_shots) {
  for (std::int64_t m = start; m <= max_shots; m *= 2) {
    const auto est = amplitude_ratio_estimate(s, x, x_prime, m, rng);
    if (est.defined && est.count_x_prime > 0 && est.stderr <= target * est.ratio) return m;
  }
  return -1;
}

}  // namespace zvlab
