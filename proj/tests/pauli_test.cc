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

#include "zvlab/pauli.h"

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "zvlab/errors.h"
#include "zvlab/serialization.h"

namespace zvlab {
namespace {

std::string random_letters(std::mt19937_64& gen, int n) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (int i = 0; i < n; ++i) s += kLetters[gen() % 4];
  return s;
}

TEST(PauliString, ParseRoundTripAndLetters) {
  const auto p = PauliString::parse("XZIY");
  EXPECT_EQ(p.n_qubits(), 4);
  EXPECT_EQ(p.letter(3), 'X');
  EXPECT_EQ(p.letter(2), 'Z');
  EXPECT_EQ(p.letter(1), 'I');
  EXPECT_EQ(p.letter(0), 'Y');
  EXPECT_EQ(p.to_string(), "XZIY");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_THROW(PauliString::parse("XQ"), ParseError);
}

TEST(PauliString, DenseMatchesKroneckerOracle) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto letters = random_letters(gen, 1 + trial % 5);
    const auto dense = PauliString::parse(letters).dense();
    EXPECT_LT((dense - testing::dense_from_letters(letters)).cwiseAbs().maxCoeff(), 1e-15) << letters;
  }
}

TEST(PauliString, HermitianAndUnitary) {
  std::mt19937_64 gen(11);
  for (int n = 1; n <= 6; ++n) {
    const auto d = PauliString::parse(random_letters(gen, n)).dense();
    EXPECT_LT((d - d.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((d * d - Eigen::MatrixXcd::Identity(d.rows(), d.cols())).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Multiply, SingleQubitAlgebra) {
  const auto [phase, product] = multiply(PauliString::parse("X"), PauliString::parse("Y"));
  EXPECT_EQ(phase, cplx(0, 1));
  EXPECT_EQ(product.to_string(), "Z");
  const auto [phase2, product2] = multiply(PauliString::parse("Y"), PauliString::parse("X"));
  EXPECT_EQ(phase2, cplx(0, -1));
  EXPECT_EQ(product2.to_string(), "Z");
}

TEST(Multiply, InvolutionGivesIdentity) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = PauliString::parse(random_letters(gen, 5));
    const auto [phase, product] = multiply(p, p);
    EXPECT_EQ(phase, cplx(1, 0));
    EXPECT_TRUE(product.is_identity());
  }
}

TEST(Multiply, MatchesDenseProduct) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto la = random_letters(gen, 4);
    const auto lb = random_letters(gen, 4);
    const auto [phase, product] = multiply(PauliString::parse(la), PauliString::parse(lb));
    const Eigen::MatrixXcd expected = testing::dense_from_letters(la) * testing::dense_from_letters(lb);
    EXPECT_LT((phase * testing::dense_from_letters(product.to_string()) - expected).cwiseAbs().maxCoeff(),
              1e-14);
    EXPECT_TRUE(phase == cplx(1, 0) || phase == cplx(-1, 0) || phase == cplx(0, 1) ||
                phase == cplx(0, -1));
  }
}

TEST(Multiply, AssociativeUpToPhaseBookkeeping) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = PauliString::parse(random_letters(gen, 4));
    const auto b = PauliString::parse(random_letters(gen, 4));
    const auto c = PauliString::parse(random_letters(gen, 4));
    const auto [p_ab, ab] = multiply(a, b);
    const auto [p_ab_c, ab_c] = multiply(ab, c);
    const auto [p_bc, bc] = multiply(b, c);
    const auto [p_a_bc, a_bc] = multiply(a, bc);
    EXPECT_EQ(ab_c, a_bc);
    EXPECT_LT(std::abs(p_ab * p_ab_c - p_bc * p_a_bc), 1e-15);
    EXPECT_LT((p_ab * p_ab_c * ab_c.dense() - a.dense() * b.dense() * c.dense()).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(Multiply, SizeMismatchThrows) {
  EXPECT_THROW(multiply(PauliString::parse("XX"), PauliString::parse("X")), DimensionError);
}

TEST(PauliSum, CanonicalizationMergesAndDrops) {
  const auto zi = PauliString::parse("ZI");
  const auto ix = PauliString::parse("IX");
  PauliSum h(2, {{cplx(1.0, 0), zi}, {cplx(0.5, 0), ix}, {cplx(-1.0, 0), zi}, {cplx(1e-14, 0), zi}});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.terms()[0].string, ix);
  EXPECT_THROW(PauliSum(3, {{cplx(1, 0), zi}}), DimensionError);
}

TEST(OneNorm, Examples) {
  EXPECT_EQ(one_norm(PauliSum(3)), 0.0);
  std::mt19937_64 gen(21);
  std::normal_distribution<double> normal;
  std::vector<PauliTerm> terms;
  for (int i = 0; i < 30; ++i) {
    terms.push_back({cplx(normal(gen), normal(gen)), PauliString::parse(random_letters(gen, 5))});
  }
  const PauliSum h(5, terms);
  double independent = 0.0;
  for (const auto& t : h.terms()) {
    if (t.string.to_string() != "IIIII") independent += std::hypot(t.coeff.real(), t.coeff.imag());
  }
  EXPECT_NEAR(one_norm(h), independent, 1e-12);
  EXPECT_NEAR(one_norm(h * cplx(-2.5, 0)), 2.5 * one_norm(h), 1e-12);
  EXPECT_NEAR(one_norm(h * cplx(0, 3)), 3.0 * one_norm(h), 1e-12);
}

TEST(PauliSum, DenseAgreesWithTermwiseSum) {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> normal;
  std::vector<PauliTerm> terms;
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(8, 8);
  for (int i = 0; i < 10; ++i) {
    const auto letters = random_letters(gen, 3);
    const cplx c(normal(gen), normal(gen));
    terms.push_back({c, PauliString::parse(letters)});
    expected += c * testing::dense_from_letters(letters);
  }
  EXPECT_LT((PauliSum(3, terms).dense() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Serialization, JsonRoundTripIsLossless) {
  std::mt19937_64 gen(4);
  std::normal_distribution<double> normal;
  std::vector<PauliTerm> terms;
  for (int i = 0; i < 12; ++i) {
    terms.push_back({cplx(normal(gen), normal(gen)), PauliString::parse(random_letters(gen, 6))});
  }
  const PauliSum h(6, terms);
  const auto doc = pauli_sum_to_json(h);
  EXPECT_EQ(doc["ordering"], kPauliOrdering);
  const PauliSum back = pauli_sum_from_json(nlohmann::json::parse(doc.dump()));
  ASSERT_EQ(back.size(), h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_EQ(back.terms()[i].string, h.terms()[i].string);
    EXPECT_EQ(back.terms()[i].coeff, h.terms()[i].coeff);
  }
}

TEST(Serialization, MalformedPauliSumReportsField) {
  const auto doc = nlohmann::json::parse(R"({"n_qubits": 2, "terms": [{"coeff": [1, 0], "string": "XYZ"}]})");
  try {
    pauli_sum_from_json(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("$.terms[0].string"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace zvlab
