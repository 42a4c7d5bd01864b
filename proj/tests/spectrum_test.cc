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

#include "zvlab/spectrum.h"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.h"
#include "zvlab/errors.h"

namespace zvlab {
namespace {

StateVector random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& a : v) a = cplx(rng.normal(), rng.normal());
  return StateVector(n, v, true);
}

TEST(ExactSpectrum, SingleSite) {
  const auto pairs = exact_spectrum(TFIMModel{1, 0.7, 0.4}.as_pauli_sum(), 1);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_NEAR(pairs[0].value, -0.7 - 0.4, 1e-12);
}

TEST(ExactSpectrum, TwoSitesMatchHandAssembledMatrix) {
  // Periodic L=2 counts the bond twice: H = -2J Z0Z1 - Gamma (X0 + X1).
  const double J = 1.0, G = 0.5;
  Eigen::Matrix4d h;
  h << -2 * J, -G, -G, 0,
       -G, 2 * J, 0, -G,
       -G, 0, 2 * J, -G,
       0, -G, -G, -2 * J;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(h);
  const auto pairs = exact_spectrum(TFIMModel{2, J, G}.as_pauli_sum(), 4);
  ASSERT_EQ(pairs.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(pairs[static_cast<std::size_t>(i)].value, es.eigenvalues()[i], 1e-12);
}

TEST(ExactSpectrum, ResidualsAndGroundEnergy) {
  const PauliSum h = TFIMModel{10, 1.0, 1.0}.as_pauli_sum();
  const auto pairs = exact_spectrum(h, 3);
  EXPECT_NEAR(pairs[0].value, testing::ground_energy(testing::tfim_matrix(10, 1.0, 1.0)), 1e-9);
  for (const auto& p : pairs) {
    const Eigen::VectorXcd r = apply_sum(h, p.vector.amplitudes()) - p.value * p.vector.amplitudes();
    EXPECT_LT(r.norm(), 1e-9);
    EXPECT_NEAR(expectation(p.vector, h), p.value, 1e-9);
  }
  // Ground vector of a stoquastic Hamiltonian: positive after the sign convention.
  EXPECT_GT(pairs[0].vector.amplitude(0).real(), 0.0);
}

TEST(ExactSpectrum, DegenerateLevelsAreReturnedTogether) {
  // Gamma = 0: the two ferromagnetic states are degenerate.
  const auto pairs = exact_spectrum(TFIMModel{4, 1.0, 0.0}.as_pauli_sum(), 1);
  EXPECT_EQ(pairs.size(), 2u);
}

TEST(ExactSpectrum, CapacityLimit) {
  EXPECT_THROW(exact_spectrum(TFIMModel{13}.as_pauli_sum(), 1), CapacityError);
}

TEST(Evolve, ZeroTimeIsIdentity) {
  const auto s = random_state(4, 1);
  const PauliSum h = TFIMModel{4, 1.0, 0.8}.as_pauli_sum();
  EXPECT_LT((evolve(s, h, 0.0, Evolution::exact()).amplitudes() - s.amplitudes()).norm(), 1e-12);
  EXPECT_LT((evolve(s, h, 0.0, Evolution::trotter(5)).amplitudes() - s.amplitudes()).norm(), 1e-12);
}

TEST(Evolve, ExactMatchesDenseExponentialAndConservesEnergy) {
  const auto s = random_state(4, 2);
  const PauliSum h = TFIMModel{4, 1.0, 0.8}.as_pauli_sum();
  const auto out = evolve(s, h, 1.7, Evolution::exact());
  const Eigen::VectorXcd expected =
      testing::expm(cplx(0, -1.7) * testing::tfim_matrix(4, 1.0, 0.8).cast<cplx>()) * s.amplitudes();
  EXPECT_LT((out.amplitudes() - expected).norm(), 1e-10);
  EXPECT_NEAR(out.norm(), 1.0, 1e-10);
  EXPECT_NEAR(expectation(out, h), expectation(s, h), 1e-10);
}

TEST(Evolve, TrotterErrorHalvesWithDoubledSteps) {
  const auto s = random_state(4, 3);
  const PauliSum h = TFIMModel{4, 1.0, 1.0}.as_pauli_sum();
  const double t = 1.0;
  const auto exact = evolve(s, h, t, Evolution::exact());
  double previous = 0.0;
  for (int steps : {64, 128, 256, 512}) {
    const auto approx = evolve(s, h, t, Evolution::trotter(steps));
    EXPECT_NEAR(approx.norm(), 1.0, 1e-10);
    const double err = (approx.amplitudes() - exact.amplitudes()).norm();
    if (previous > 0.0) EXPECT_NEAR(previous / err, 2.0, 0.1) << "steps=" << steps;
    previous = err;
  }
}

TEST(Chebyshev, MatchesDenseExponential) {
  Rng rng(7);
  IsingOperator op{6, std::vector<double>(64), 0.45};
  for (auto& d : op.diagonal) d = 3.0 * rng.normal();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(64);
  v[13] = 1.0;
  for (double t : {0.0, 0.3, 5.0, 19.5, 60.0, -2.0, -23.0}) {
    const Eigen::VectorXcd expected = testing::expm(cplx(0, -t) * op.dense().cast<cplx>()) * v;
    EXPECT_LT((chebyshev_propagate(op, v, t) - expected).norm(), 1e-10) << "t=" << t;
  }
}

}  // namespace
}  // namespace zvlab
