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

#ifndef ZVLAB_PAULI_H
#define ZVLAB_PAULI_H

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zvlab {

using cplx = std::complex<double>;

/// Tensor product of single-qubit Paulis on up to 64 qubits.
///
/// Stored in symplectic form: the operator is i^{|x & z|} X^x Z^z, so a set bit
/// in both masks is a Y on that qubit. Qubit k is bit k of the computational
/// basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parses "XZIY"-style text. The leftmost character is the highest qubit.
  static PauliString parse(std::string_view letters);

  /// Single non-identity letter on `qubit`.
  static PauliString single(int n_qubits, int qubit, char letter);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  char letter(int qubit) const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_diagonal() const { return x_ == 0; }
  /// Qubits carrying a non-identity letter.
  std::uint64_t support() const { return x_ | z_; }
  int weight() const;

  /// Leftmost character is the highest qubit index.
  std::string to_string() const;

  /// P|b> = phase * |b ^ x_mask>. Returns the phase.
  cplx phase_on_basis(std::uint64_t b) const;

  /// Dense 2^n x 2^n matrix (n <= 12).
  Eigen::MatrixXcd dense() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.z_ <=> b.z_;
  }

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// a * b = phase * product with phase in {1, -1, i, -i}.
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

/// True when every qubit carries equal letters or an identity in one of them.
bool commute_qubitwise(const PauliString& a, const PauliString& b);

/// True when the two strings commute as operators.
bool commute(const PauliString& a, const PauliString& b);

struct PauliTerm {
  cplx coeff;
  PauliString string;
};

/// Weighted sum of Pauli strings on a common register.
///
/// Canonical form: strings are unique, sorted by (x, z) mask, and terms with
/// |coeff| < kDropTolerance are removed. Every mutating operation
/// re-canonicalizes, so a constructed PauliSum is always canonical.
class PauliSum {
 public:
  static constexpr double kDropTolerance = 1e-12;

  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the identity string (zero when absent).
  cplx identity_coeff() const;

  /// Largest |Im h_j|; physical Hamiltonians have this at round-off level.
  double max_imag() const;

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator*(const PauliSum& other) const;
  PauliSum operator*(cplx scale) const;

  /// Hermitian adjoint: conjugated coefficients (strings are Hermitian).
  PauliSum adjoint() const;

  Eigen::MatrixXcd dense() const;

 private:
  void canonicalize();

  int n_;
  std::vector<PauliTerm> terms_;
};

/// Sum of |h_j| over the non-identity terms.
double one_norm(const PauliSum& h);

}  // namespace zvlab

#endif  // ZVLAB_PAULI_H
