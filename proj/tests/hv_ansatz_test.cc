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

#include "zvlab/hv_ansatz.h"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.h"
#include "zvlab/errors.h"
#include "zvlab/rng.h"

namespace zvlab {
namespace {

HVAnsatz random_ansatz(int L, int d, std::uint64_t seed, double width = 1.0) {
  Rng rng(seed);
  HVAnsatz a(TFIMModel{L, 1.0, 0.8}, d);
  for (auto& p : a.params) p = rng.uniform(-width, width);
  return a;
}

HVAnsatz shifted(HVAnsatz a, int i, double h) {
  a.params[static_cast<std::size_t>(i)] += h;
  return a;
}

TEST(HVAnsatz, ParameterCountIsTwoPerBlock) {
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(HVAnsatz(TFIMModel{4}, d).n_params(), 2 * d);
  EXPECT_THROW(HVAnsatz(TFIMModel{4}, 2, {0.1, 0.2, 0.3}), DimensionError);
}

TEST(HVAnsatz, ZeroAnglesGiveThePlusState) {
  const HVAnsatz a(TFIMModel{5, 1.0, 1.3}, 3);
  EXPECT_LT((prepare(a).amplitudes() - init_plus(5).amplitudes()).norm(), 1e-14);
  EXPECT_NEAR(exact_energy(a), -1.3 * 5, 1e-12);
}

TEST(HVAnsatz, SingleBlockMatchesDenseExponentials) {
  const double t1 = 0.37, t2 = -0.81;
  const HVAnsatz a(TFIMModel{2, 1.0, 1.0}, 1, {t1, t2});
  const Eigen::MatrixXcd h1 = testing::tfim_matrix(2, 1.0, 0.0).cast<cplx>();
  const Eigen::MatrixXcd h2 = testing::tfim_matrix(2, 0.0, 1.0).cast<cplx>();
  const Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(4, 0.5);
  const Eigen::VectorXcd want = testing::expm(cplx(0, t2) * h2) * testing::expm(cplx(0, t1) * h1) * plus;
  EXPECT_LT((prepare(a).amplitudes() - want).norm(), 1e-10);
}

TEST(HVAnsatz, EnergyMatchesDenseExpectation) {
  const HVAnsatz a = random_ansatz(6, 3, 5);
  const Eigen::VectorXcd psi = prepare(a).amplitudes();
  const Eigen::MatrixXcd h = testing::tfim_matrix(6, 1.0, 0.8).cast<cplx>();
  EXPECT_NEAR(exact_energy(a), psi.dot(h * psi).real(), 1e-12);
}

TEST(HVAnsatz, GradientMatchesCentralDifferences) {
  const double h = 1e-5;
  for (int L : {3, 4, 6}) {
    for (int d : {1, 2, 4}) {
      const HVAnsatz a = random_ansatz(L, d, static_cast<std::uint64_t>(10 * L + d));
      const EnergyGradient eg = energy_and_gradient(a);
      EXPECT_NEAR(eg.energy, exact_energy(a), 1e-12);
      for (int i = 0; i < a.n_params(); ++i) {
        const double fd = (exact_energy(shifted(a, i, h)) - exact_energy(shifted(a, i, -h))) / (2 * h);
        EXPECT_NEAR(eg.gradient[i], fd, 1e-6) << "L=" << L << " d=" << d << " i=" << i;
      }
    }
  }
}

TEST(HVAnsatz, DerivativeStatesMatchFiniteDifferences) {
  const double h = 1e-5;
  const HVAnsatz a = random_ansatz(4, 2, 77);
  const auto d = derivative_states(a);
  for (int i = 0; i < a.n_params(); ++i) {
    const Eigen::VectorXcd fd =
        (prepare(shifted(a, i, h)).amplitudes() - prepare(shifted(a, i, -h)).amplitudes()) / (2 * h);
    EXPECT_LT((d[static_cast<std::size_t>(i)] - fd).norm(), 1e-8);
  }
}

TEST(SRMatrix, MatchesFiniteDifferenceStates) {
  const double h = 1e-5;
  for (int L : {4, 6}) {
    const HVAnsatz a = random_ansatz(L, 3, static_cast<std::uint64_t>(L));
    const Eigen::VectorXcd psi = prepare(a).amplitudes();
    const int n = a.n_params();
    std::vector<Eigen::VectorXcd> fd;
    for (int i = 0; i < n; ++i) {
      fd.push_back((prepare(shifted(a, i, h)).amplitudes() - prepare(shifted(a, i, -h)).amplitudes()) / (2 * h));
    }
    const SRMatrix s = sr_matrix(a);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
        const double want = (fd[ii].dot(fd[jj]) - std::conj(psi.dot(fd[ii])) * psi.dot(fd[jj])).real();
        EXPECT_NEAR(s.entries(i, j), want, 1e-6);
      }
    }
  }
}

TEST(SRMatrix, SymmetricPositiveSemidefinite) {
  for (int L : {2, 4, 6}) {
    for (int d = 1; d <= 4; ++d) {
      const SRMatrix s = sr_matrix(random_ansatz(L, d, static_cast<std::uint64_t>(100 + 7 * L + d), 3.0));
      EXPECT_LT((s.entries - s.entries.transpose()).cwiseAbs().maxCoeff(), 1e-10);
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.entries);
      EXPECT_GT(es.eigenvalues().minCoeff(), -1e-8);
    }
  }
}

TEST(SRMatrix, FirstEntryIsGeneratorVariance) {
  // On |+>, distinct ZZ bonds are uncorrelated, so Var(H_1) = L J^2.
  for (int L : {3, 5, 8}) {
    const HVAnsatz a(TFIMModel{L, 1.5, 1.0}, 1, {0.0, 0.4});
    EXPECT_NEAR(sr_matrix(a).entries(0, 0), L * 1.5 * 1.5, 1e-10);
  }
}

TEST(SRMatrix, BlockDiagonalKeepsIntraBlockEntries) {
  const HVAnsatz a = random_ansatz(4, 3, 9);
  const SRMatrix full = sr_matrix(a);
  const SRMatrix block = sr_matrix(a, true);
  for (int i = 0; i < a.n_params(); ++i) {
    for (int j = 0; j < a.n_params(); ++j) {
      const bool same = i / 2 == j / 2;
      EXPECT_DOUBLE_EQ(block.entries(i, j), same ? full.entries(i, j) : 0.0);
    }
  }
}

}  // namespace
}  // namespace zvlab
