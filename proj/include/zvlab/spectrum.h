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

#ifndef ZVLAB_SPECTRUM_H
#define ZVLAB_SPECTRUM_H

#include <vector>

#include "zvlab/pauli.h"
#include "zvlab/state_vector.h"

namespace zvlab {

inline constexpr int kMaxDenseQubits = 12;

struct Eigenpair {
  double value;
  StateVector vector;
};

/// The k lowest eigenpairs of a Hermitian PauliSum, ascending. If the k-th
/// level is degenerate, the whole degenerate multiplet is returned. Each
/// eigenvector's first non-negligible amplitude is made real positive.
std::vector<Eigenpair> exact_spectrum(const PauliSum& h, int k);

struct Evolution {
  enum class Kind { kExact, kTrotter };
  Kind kind = Kind::kExact;
  int steps = 1;

  static Evolution exact() { return {Kind::kExact, 1}; }
  static Evolution trotter(int steps) { return {Kind::kTrotter, steps}; }
};

/// exp(-i H t)|psi>. The exact path diagonalizes the dense matrix; the Trotter
/// path alternates the diagonal part with the off-diagonal terms in
/// first-order product form.
StateVector evolve(const StateVector& s, const PauliSum& h, double t, Evolution method);

/// H = diag(V) - field * sum_k X_k on L qubits: the Ising-plus-transverse-field
/// family used by the circuit layers and the quantum proposal.
struct IsingOperator {
  int L = 0;
  std::vector<double> diagonal;
  double field = 0.0;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  Eigen::MatrixXd dense() const;
  /// Gershgorin bounds on the spectrum.
  std::pair<double, double> spectral_bounds() const;
};

/// exp(-i H t)|v> by Chebyshev expansion, truncated once the Bessel weights
/// fall below 1e-16 past order |a t|.
Eigen::VectorXcd chebyshev_propagate(const IsingOperator& h, const Eigen::VectorXcd& v, double t);

}  // namespace zvlab

#endif  // ZVLAB_SPECTRUM_H
