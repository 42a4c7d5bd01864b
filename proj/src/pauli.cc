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

#include <algorithm>
#include <bit>
#include <map>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

constexpr int kMaxQubits = 64;
constexpr int kMaxDenseQubits = 12;

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_dense(int n) {
  if (n > kMaxDenseQubits) {
    throw CapacityError("dense matrix requested for " + std::to_string(n) +
                        " qubits (limit " + std::to_string(kMaxDenseQubits) + ")");
  }
}

}  // namespace

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("PauliString qubit count must be in [1, 64]");
  }
  if (((x_mask | z_mask) & ~low_mask(n_qubits)) != 0) {
    throw DimensionError("PauliString mask has bits beyond n_qubits");
  }
}

PauliString PauliString::parse(std::string_view letters) {
  const int n = static_cast<int>(letters.size());
  PauliString p(n);
  for (int pos = 0; pos < n; ++pos) {
    const int qubit = n - 1 - pos;
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    switch (letters[pos]) {
      case 'I':
        break;
      case 'X':
        p.x_ |= bit;
        break;
      case 'Y':
        p.x_ |= bit;
        p.z_ |= bit;
        break;
      case 'Z':
        p.z_ |= bit;
        break;
      default:
        throw ParseError("invalid Pauli letter '" + std::string(1, letters[pos]) +
                         "' at position " + std::to_string(pos));
    }
  }
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  if (qubit < 0 || qubit >= n_qubits) throw std::out_of_range("qubit index out of range");
  std::string text(static_cast<std::size_t>(n_qubits), 'I');
  text[static_cast<std::size_t>(n_qubits - 1 - qubit)] = letter;
  return parse(text);
}

char PauliString::letter(int qubit) const {
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::string PauliString::to_string() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[static_cast<std::size_t>(n_ - 1 - q)] = letter(q);
  return out;
}

cplx PauliString::phase_on_basis(std::uint64_t b) const {
  const int k = std::popcount(x_ & z_) + 2 * std::popcount(z_ & b);
  return i_power(k);
}

Eigen::MatrixXcd PauliString::dense() const {
  check_dense(n_);
  const std::uint64_t dim = std::uint64_t{1} << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    m(static_cast<Eigen::Index>(b ^ x_), static_cast<Eigen::Index>(b)) = phase_on_basis(b);
  }
  return m;
}

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("multiply: qubit counts differ");
  }
  // (i^a X^x1 Z^z1)(i^b X^x2 Z^z2) = i^{a+b} (-1)^{|z1 & x2|} X^x Z^z
  //                                 = i^{a+b+2|z1&x2|-c} P,  c = |x & z|.
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  const int k = std::popcount(a.x_mask() & a.z_mask()) + std::popcount(b.x_mask() & b.z_mask()) +
                2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x & z);
  return {i_power(k), PauliString(a.n_qubits(), x, z)};
}

bool commute_qubitwise(const PauliString& a, const PauliString& b) {
  const std::uint64_t both = a.support() & b.support();
  return ((a.x_mask() ^ b.x_mask()) & both) == 0 && ((a.z_mask() ^ b.z_mask()) & both) == 0;
}

bool commute(const PauliString& a, const PauliString& b) {
  const int anti = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
  return anti % 2 == 0;
}

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("PauliSum qubit count must be in [1, 64]");
  }
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms)
    : PauliSum(n_qubits) {
  for (const auto& t : terms) {
    if (t.string.n_qubits() != n_qubits) {
      throw DimensionError("PauliSum term has " + std::to_string(t.string.n_qubits()) +
                           " qubits, expected " + std::to_string(n_qubits));
    }
  }
  terms_ = std::move(terms);
  canonicalize();
}

void PauliSum::canonicalize() {
  std::map<PauliString, cplx> merged;
  for (const auto& t : terms_) merged[t.string] += t.coeff;
  terms_.clear();
  for (const auto& [s, c] : merged) {
    if (std::abs(c) >= kDropTolerance) terms_.push_back({c, s});
  }
}

cplx PauliSum::identity_coeff() const {
  for (const auto& t : terms_) {
    if (t.string.is_identity()) return t.coeff;
  }
  return {0.0, 0.0};
}

double PauliSum::max_imag() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff.imag()));
  return m;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  if (other.n_ != n_) throw DimensionError("PauliSum addition: qubit counts differ");
  std::vector<PauliTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return PauliSum(n_, std::move(all));
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
  if (other.n_ != n_) throw DimensionError("PauliSum product: qubit counts differ");
  std::vector<PauliTerm> all;
  all.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      auto [phase, s] = multiply(a.string, b.string);
      all.push_back({a.coeff * b.coeff * phase, s});
    }
  }
  return PauliSum(n_, std::move(all));
}

PauliSum PauliSum::operator*(cplx scale) const {
  std::vector<PauliTerm> all = terms_;
  for (auto& t : all) t.coeff *= scale;
  return PauliSum(n_, std::move(all));
}

PauliSum PauliSum::adjoint() const {
  std::vector<PauliTerm> all = terms_;
  for (auto& t : all) t.coeff = std::conj(t.coeff);
  return PauliSum(n_, std::move(all));
}

Eigen::MatrixXcd PauliSum::dense() const {
  check_dense(n_);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms_) {
    const std::uint64_t x = t.string.x_mask();
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      m(static_cast<Eigen::Index>(ub ^ x), b) += t.coeff * t.string.phase_on_basis(ub);
    }
  }
  return m;
}

double one_norm(const PauliSum& h) {
  double total = 0.0;
  for (const auto& t : h.terms()) {
    if (!t.string.is_identity()) total += std::abs(t.coeff);
  }
  return total;
}

}  // namespace zvlab
