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

#include "zvlab/tfim.h"

#include "zvlab/errors.h"

namespace zvlab {

std::vector<std::pair<int, int>> TFIMModel::bonds() const {
  if (L < 1) throw DimensionError("TFIM chain length must be positive");
  std::vector<std::pair<int, int>> out;
  const int count = periodic ? L : L - 1;
  for (int k = 0; k < count; ++k) out.emplace_back(k, (k + 1) % L);
  return out;
}

int TFIMModel::bond_sum(std::uint64_t b) const {
  int total = 0;
  for (const auto& [i, j] : bonds()) total += (((b >> i) ^ (b >> j)) & 1U) ? -1 : 1;
  return total;
}

std::vector<double> TFIMModel::h1_diagonal() const {
  const auto bond_list = bonds();
  const std::uint64_t dim = std::uint64_t{1} << L;
  std::vector<double> diag(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    int total = 0;
    for (const auto& [i, j] : bond_list) total += (((b >> i) ^ (b >> j)) & 1U) ? -1 : 1;
    diag[b] = -J * total;
  }
  return diag;
}

PauliSum TFIMModel::as_pauli_sum() const {
  std::vector<PauliTerm> terms;
  for (const auto& [i, j] : bonds()) {
    const std::uint64_t z = (std::uint64_t{1} << i) ^ (std::uint64_t{1} << j);
    terms.push_back({cplx(-J, 0.0), PauliString(L, 0, z)});
  }
  for (int k = 0; k < L; ++k) {
    terms.push_back({cplx(-Gamma, 0.0), PauliString::single(L, k, 'X')});
  }
  return PauliSum(L, std::move(terms));
}

}  // namespace zvlab
