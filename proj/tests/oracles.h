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

// Independent reference constructions used only by the tests. Nothing here
// goes through the symplectic Pauli representation or the library's
// propagators.

#ifndef ZVLAB_TESTS_ORACLES_H
#define ZVLAB_TESTS_ORACLES_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace zvlab::testing {

using cplx = std::complex<double>;

inline Eigen::Matrix2cd letter_matrix(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of the letters; leftmost letter is the most significant
/// qubit, so basis index bit k is qubit k.
inline Eigen::MatrixXcd dense_from_letters(const std::string& letters) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (const char c : letters) m = kron(m, letter_matrix(c));
  return m;
}

/// Kronecker-built operator placing `op` on `qubit` and `tail` on all lower qubits.
inline Eigen::MatrixXcd place(int n, int qubit, const Eigen::Matrix2cd& op,
                              const Eigen::Matrix2cd& tail) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    Eigen::Matrix2cd f = Eigen::Matrix2cd::Identity();
    if (q == qubit) f = op;
    if (q < qubit) f = tail;
    m = kron(m, f);
  }
  return m;
}

/// Dense annihilator |0><1| on mode p with a Z parity tail.
inline Eigen::MatrixXcd dense_annihilator(int p, int n) {
  Eigen::Matrix2cd lower;
  lower << 0, 1, 0, 0;
  return place(n, p, lower, letter_matrix('Z'));
}

/// TFIM matrix assembled directly from bit manipulation, no Pauli algebra.
inline Eigen::MatrixXd tfim_matrix(int L, double J, double gamma, bool periodic = true) {
  const int dim = 1 << L;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const int bonds = periodic ? L : L - 1;
  for (int b = 0; b < dim; ++b) {
    for (int k = 0; k < bonds; ++k) {
      const int s1 = ((b >> k) & 1) ? -1 : 1;
      const int s2 = ((b >> ((k + 1) % L)) & 1) ? -1 : 1;
      h(b, b) -= J * s1 * s2;
    }
    for (int k = 0; k < L; ++k) h(b ^ (1 << k), b) -= gamma;
  }
  return h;
}

inline double ground_energy(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  return es.eigenvalues()[0];
}

inline Eigen::VectorXd ground_vector(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::VectorXd v = es.eigenvectors().col(0);
  if (v.sum() < 0) v = -v;
  return v;
}

/// Padé matrix exponential from Eigen's unsupported module.
inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return a.exp(); }

}  // namespace zvlab::testing

#endif  // ZVLAB_TESTS_ORACLES_H
