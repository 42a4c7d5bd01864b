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

#ifndef ZVLAB_FERMION_H
#define ZVLAB_FERMION_H

#include <vector>

#include "zvlab/pauli.h"

namespace zvlab {

/// H = sum_pq t[p][q] a+_p a_q + sum_pqrs u[p][q][r][s] a+_p a+_q a_r a_s
/// in Hartree. The two-body operator order is taken literally; no integral
/// symmetry convention is assumed.
struct FermionHamiltonian {
  int n_modes = 0;
  std::vector<double> one_body;  // row-major n^2
  std::vector<double> two_body;  // row-major n^4

  explicit FermionHamiltonian(int n = 0);

  double& t(int p, int q) { return one_body[index2(p, q)]; }
  double t(int p, int q) const { return one_body[index2(p, q)]; }
  double& u(int p, int q, int r, int s) { return two_body[index4(p, q, r, s)]; }
  double u(int p, int q, int r, int s) const { return two_body[index4(p, q, r, s)]; }

  /// Throws DimensionError on table size mismatch or asymmetric one_body.
  void validate() const;

 private:
  std::size_t index2(int p, int q) const {
    return static_cast<std::size_t>(p) * n_modes + q;
  }
  std::size_t index4(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p) * n_modes + q) * n_modes + r) * n_modes + s;
  }
};

/// a_p = (X + iY)_p/2 (x) Z_{p-1} ... Z_0; mode p lives on qubit p and an
/// occupied mode is bit value 1.
PauliSum jw_annihilation(int p, int n);
PauliSum jw_creation(int p, int n);

/// Jordan-Wigner image of the full second-quantized Hamiltonian.
PauliSum map_fermionic(const FermionHamiltonian& h);

}  // namespace zvlab

#endif  // ZVLAB_FERMION_H
