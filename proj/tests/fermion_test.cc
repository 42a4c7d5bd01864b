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

#include "zvlab/fermion.h"

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "zvlab/errors.h"
#include "zvlab/grouping.h"
#include "zvlab/serialization.h"

namespace zvlab {
namespace {

Eigen::MatrixXcd dense_second_quantized(const FermionHamiltonian& h) {
  const int n = h.n_modes;
  std::vector<Eigen::MatrixXcd> a, ad;
  for (int p = 0; p < n; ++p) {
    a.push_back(testing::dense_annihilator(p, n));
    ad.push_back(a.back().adjoint());
  }
  const int dim = 1 << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) m += h.t(p, q) * ad[p] * a[q];
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) m += h.u(p, q, r, s) * ad[p] * ad[q] * a[r] * a[s];
  return m;
}

FermionHamiltonian random_hamiltonian(int n, std::uint64_t seed, bool hermitian) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  FermionHamiltonian h(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) h.t(p, q) = h.t(q, p) = normal(gen);
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) h.u(p, q, r, s) = normal(gen);
  if (hermitian) {
    // (a+_p a+_q a_r a_s)^dagger = a+_s a+_r a_q a_p
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            const double avg = 0.5 * (h.u(p, q, r, s) + h.u(s, r, q, p));
            h.u(p, q, r, s) = h.u(s, r, q, p) = avg;
          }
  }
  return h;
}

TEST(JordanWigner, SingleModeAnnihilator) {
  const PauliSum a = jw_annihilation(0, 1);
  ASSERT_EQ(a.size(), 2u);
  for (const auto& t : a.terms()) {
    if (t.string.to_string() == "X") EXPECT_EQ(t.coeff, cplx(0.5, 0));
    else if (t.string.to_string() == "Y") EXPECT_EQ(t.coeff, cplx(0, 0.5));
    else FAIL() << "unexpected term " << t.string.to_string();
  }
}

TEST(JordanWigner, MatchesKroneckerOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p < n; ++p) {
      const auto a = jw_annihilation(p, n).dense();
      EXPECT_LT((a - testing::dense_annihilator(p, n)).cwiseAbs().maxCoeff(), 1e-15);
      EXPECT_LT((jw_creation(p, n).dense() - a.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
}

TEST(JordanWigner, CanonicalAnticommutationRelations) {
  const int n = 4;
  const auto id = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const auto ap = jw_annihilation(p, n).dense();
      const auto aq = jw_annihilation(q, n).dense();
      const auto adq = jw_creation(q, n).dense();
      EXPECT_LT((ap * aq + aq * ap).cwiseAbs().maxCoeff(), 1e-12);
      const Eigen::MatrixXcd expected = (p == q) ? Eigen::MatrixXcd(id) : Eigen::MatrixXcd::Zero(16, 16);
      EXPECT_LT((ap * adq + adq * ap - expected).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(JordanWigner, OutOfRangeMode) {
  EXPECT_THROW(jw_annihilation(3, 3), std::out_of_range);
  EXPECT_THROW(jw_creation(-1, 3), std::out_of_range);
}

TEST(MapFermionic, NumberOperator) {
  FermionHamiltonian h(3);
  h.t(1, 1) = 1.0;
  const PauliSum mapped = map_fermionic(h);
  ASSERT_EQ(mapped.size(), 2u);
  EXPECT_EQ(mapped.identity_coeff(), cplx(0.5, 0));
  for (const auto& t : mapped.terms()) {
    if (!t.string.is_identity()) {
      EXPECT_EQ(t.string.to_string(), "IZI");
      EXPECT_EQ(t.coeff, cplx(-0.5, 0));
    }
  }
}

TEST(MapFermionic, HoppingTwoModes) {
  FermionHamiltonian h(2);
  h.t(0, 1) = h.t(1, 0) = 1.0;
  const PauliSum mapped = map_fermionic(h);
  const Eigen::MatrixXcd expected =
      0.5 * (testing::dense_from_letters("XX") + testing::dense_from_letters("YY"));
  EXPECT_LT((mapped.dense() - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(mapped.size(), 2u);
}

TEST(MapFermionic, RandomThreeModeDenseEquivalence) {
  const auto h = random_hamiltonian(3, 17, /*hermitian=*/false);
  EXPECT_LT((map_fermionic(h).dense() - dense_second_quantized(h)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MapFermionic, HermitianInputGivesRealCoefficients) {
  for (int n = 2; n <= 5; ++n) {
    const auto h = random_hamiltonian(n, 100 + n, /*hermitian=*/true);
    const PauliSum mapped = map_fermionic(h);
    EXPECT_LT(mapped.max_imag(), 1e-12);
    EXPECT_LT((mapped.dense() - dense_second_quantized(h)).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_TRUE(is_valid_grouping(mapped, group_qubitwise(mapped)));
  }
}

TEST(MapFermionic, AsymmetricOneBodyRejected) {
  FermionHamiltonian h(2);
  h.t(0, 1) = 1.0;
  EXPECT_THROW(map_fermionic(h), DimensionError);
}

TEST(FermionJson, RoundTripThroughSerialization) {
  const auto h = random_hamiltonian(3, 5, true);
  const auto back = fermion_from_json(nlohmann::json::parse(fermion_to_json(h).dump()));
  EXPECT_EQ(back.one_body, h.one_body);
  EXPECT_EQ(back.two_body, h.two_body);
  const auto m1 = map_fermionic(h), m2 = map_fermionic(back);
  const auto j1 = pauli_sum_to_json(m1).dump();
  EXPECT_EQ(j1, pauli_sum_to_json(pauli_sum_from_json(nlohmann::json::parse(j1))).dump());
  EXPECT_EQ(j1, pauli_sum_to_json(m2).dump());
}

TEST(FermionJson, MalformedInputNamesTheField) {
  const auto doc = nlohmann::json::parse(R"({"n_modes": 2, "one_body": [[0, 1], [1, "x"]]})");
  try {
    fermion_from_json(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("$.one_body[1][1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(fermion_from_json(nlohmann::json::parse(R"({"one_body": []})")), ParseError);
}

}  // namespace
}  // namespace zvlab
