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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.h"
#include "zvlab/errors.h"
#include "zvlab/spectrum.h"
#include "zvlab/tfim.h"

namespace zvlab {
namespace {

StateVector random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& a : v) a = cplx(rng.normal(), rng.normal());
  return StateVector(n, v, true);
}

StateVector tfim_ground(int L) {
  return exact_spectrum(TFIMModel{L}.as_pauli_sum(), 1).front().vector;
}

double sample_std(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

TEST(ShotPlan, TotalsAndValidation) {
  EXPECT_EQ(ShotPlan::uniform(3, 100).total(), 300);
  EXPECT_THROW(ShotPlan::uniform(2, 0), std::invalid_argument);
}

TEST(ShotBudget, Arithmetic) {
  EXPECT_EQ(shot_budget(2, 1000, 100), 200000);
  EXPECT_EQ(shot_budget(1, 1, 1), 1);
}

TEST(PauliEstimator, DeterministicOutcomeHasNoError) {
  const PauliSum h(3, {{cplx(-0.7, 0.0), PauliString::parse("IZI")}});
  Rng rng(1);
  const auto groups = group_qubitwise(h);
  const auto est = estimate_energy_pauli(StateVector::basis(3, 0), h, groups, ShotPlan::uniform(1, 500), rng);
  EXPECT_DOUBLE_EQ(est.mean, -0.7);
  EXPECT_DOUBLE_EQ(est.stderr, 0.0);
  EXPECT_EQ(est.shots_used, 500);
}

TEST(PauliEstimator, GroundStateEstimateIsUnbiasedButNoisy) {
  const TFIMModel model{10};
  const PauliSum h = model.as_pauli_sum();
  const auto groups = group_qubitwise(h);
  const StateVector g = tfim_ground(10);
  const double e0 = expectation(g, h);
  Rng rng(2024);
  const auto est = estimate_energy_pauli(g, h, groups, ShotPlan::uniform(groups.size(), 1000), rng);
  EXPECT_GT(est.stderr, 0.01);
  EXPECT_LT(std::abs(est.mean - e0), 3.0 * est.stderr);
  EXPECT_EQ(est.shots_used, 2000);
}

TEST(PauliEstimator, UnbiasedOnRandomStates) {
  for (int n : {4, 6}) {
    Rng rng(static_cast<std::uint64_t>(n));
    PauliSum h(n, {});
    for (int t = 0; t < 12; ++t) {
      std::string s;
      for (int k = 0; k < n; ++k) s += "IXYZ"[rng.below(4)];
      h = h + PauliSum(n, {{cplx(rng.normal(), 0.0), PauliString::parse(s)}});
    }
    const StateVector psi = random_state(n, 40 + static_cast<std::uint64_t>(n));
    const double exact = expectation(psi, h);
    const auto groups = group_qubitwise(h);
    double sum = 0.0, sum_err = 0.0;
    const int reps = 200;
    for (int r = 0; r < reps; ++r) {
      const auto est = estimate_energy_pauli(psi, h, groups, ShotPlan::uniform(groups.size(), 200), rng);
      sum += est.mean;
      sum_err += est.stderr;
    }
    EXPECT_LT(std::abs(sum / reps - exact), 4.0 * (sum_err / reps) / std::sqrt(reps));
  }
}

TEST(PauliEstimator, StderrMatchesSpreadOfRepeatedMeans) {
  const TFIMModel model{10};
  const PauliSum h = model.as_pauli_sum();
  const auto groups = group_qubitwise(h);
  const StateVector g = tfim_ground(10);
  Rng rng(99);
  std::vector<double> means;
  double mean_err = 0.0;
  for (int r = 0; r < 100; ++r) {
    const auto est = estimate_energy_pauli(g, h, groups, ShotPlan::uniform(groups.size(), 1000), rng);
    means.push_back(est.mean);
    mean_err += est.stderr / 100.0;
  }
  EXPECT_NEAR(mean_err / sample_std(means), 1.0, 0.25);
}

TEST(PredictedError, VanishesOnCommonEigenstate) {
  const PauliSum h(3, {{cplx(1.0, 0.0), PauliString::parse("ZZI")}, {cplx(2.0, 0.0), PauliString::parse("IIZ")}});
  const auto groups = group_qubitwise(h);
  EXPECT_DOUBLE_EQ(predicted_error(StateVector::basis(3, 0), h, groups, ShotPlan::uniform(groups.size(), 10)), 0.0);
}

TEST(PredictedError, ScalesAsInverseRootShots) {
  const PauliSum h = TFIMModel{6}.as_pauli_sum();
  const auto groups = group_qubitwise(h);
  const StateVector psi = random_state(6, 3);
  const double e1 = predicted_error(psi, h, groups, ShotPlan::uniform(groups.size(), 100));
  const double e4 = predicted_error(psi, h, groups, ShotPlan::uniform(groups.size(), 400));
  EXPECT_NEAR(e1 / e4, 2.0, 1e-12);
}

TEST(PredictedError, AgreesWithIndependentTermSampling) {
  // The formula assumes uncorrelated terms; measuring each term on its own
  // shots realises exactly that.
  const PauliSum h = TFIMModel{8}.as_pauli_sum();
  const auto groups = singleton_groups(h);
  const StateVector g = tfim_ground(8);
  const ShotPlan plan = ShotPlan::uniform(groups.size(), 1000);
  Rng rng(5);
  std::vector<double> means;
  for (int r = 0; r < 100; ++r) means.push_back(estimate_energy_pauli(g, h, groups, plan, rng).mean);
  EXPECT_NEAR(sample_std(means) / predicted_error(g, h, groups, plan), 1.0, 0.25);
}

TEST(AmplitudeRatio, IdenticalConfigurationsGiveOne) {
  Rng rng(1);
  const SpinConfiguration x(4, 5);
  const auto est = amplitude_ratio_estimate(init_plus(4), x, x, 1000, rng);
  ASSERT_TRUE(est.defined);
  EXPECT_DOUBLE_EQ(est.ratio, 1.0);
  EXPECT_DOUBLE_EQ(est.stderr, 0.0);
}

TEST(AmplitudeRatio, UniformStateRatioIsOne) {
  Rng rng(2);
  const auto est = amplitude_ratio_estimate(init_plus(3), SpinConfiguration(3, 1), SpinConfiguration(3, 6), 100000, rng);
  ASSERT_TRUE(est.defined);
  EXPECT_NEAR(est.ratio, 1.0, 0.05);
  EXPECT_LT(std::abs(est.ratio - 1.0), 4.0 * est.stderr);
}

TEST(AmplitudeRatio, MissingDenominatorIsFlagged) {
  Rng rng(3);
  const auto est = amplitude_ratio_estimate(StateVector::basis(3, 0), SpinConfiguration(3, 7), SpinConfiguration(3, 0), 100, rng);
  EXPECT_FALSE(est.defined);
  EXPECT_EQ(est.count_x, 0);
  EXPECT_EQ(est.count_x_prime, 100);
}

TEST(AmplitudeRatio, StderrCoversTruth) {
  const StateVector g = tfim_ground(6);
  const SpinConfiguration up = SpinConfiguration::all_up(6);
  const SpinConfiguration x(6, 0b000011);
  const double truth = g.probabilities()[up.index()] / g.probabilities()[x.index()];
  Rng rng(4);
  int covered = 0;
  for (int r = 0; r < 200; ++r) {
    const auto est = amplitude_ratio_estimate(g, x, up, 20000, rng);
    if (std::abs(est.ratio - truth) < 2.0 * est.stderr) ++covered;
  }
  EXPECT_GT(covered, 170);  // ~95% nominal
}

TEST(AmplitudeRatio, RequiredShotsTrackDenominatorProbability) {
  Rng rng(6);
  std::int64_t prev = 0;
  for (int L : {4, 6, 8}) {
    const StateVector g = tfim_ground(L);
    const SpinConfiguration up = SpinConfiguration::all_up(L);
    const SpinConfiguration neel = SpinConfiguration::from_spins([&] {
      std::vector<int> s(static_cast<std::size_t>(L));
      for (int k = 0; k < L; ++k) s[static_cast<std::size_t>(k)] = k % 2 ? -1 : 1;
      return s;
    }());
    const std::int64_t m = shots_for_relative_error(g, neel, up, 0.1, rng);
    ASSERT_GT(m, 0);
    EXPECT_GT(m, prev);
    prev = m;
  }
}

}  // namespace
}  // namespace zvlab
