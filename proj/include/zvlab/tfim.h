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

#ifndef ZVLAB_TFIM_H
#define ZVLAB_TFIM_H

#include <cstdint>
#include <utility>
#include <vector>

#include "zvlab/pauli.h"

namespace zvlab {

/// H = H_1 + H_2 with H_1 = -J sum_k Z_k Z_{k+1} and H_2 = -Gamma sum_k X_k.
/// Periodic chains close the sum with site L+1 == site 1.
struct TFIMModel {
  int L = 0;
  double J = 1.0;
  double Gamma = 1.0;
  bool periodic = true;

  /// Bonds (k, k+1) entering H_1, in summation order.
  std::vector<std::pair<int, int>> bonds() const;

  /// sum over bonds of s_i s_j for basis index b.
  int bond_sum(std::uint64_t b) const;

  /// Diagonal of H_1 over all 2^L basis states.
  std::vector<double> h1_diagonal() const;

  PauliSum as_pauli_sum() const;
};

}  // namespace zvlab

#endif  // ZVLAB_TFIM_H
