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

#include <cmath>
#include <string>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

PauliSum ladder(int p, int n, double y_sign) {
  if (n < 1) throw DimensionError("mode count must be positive");
  if (p < 0 || p >= n) {
    throw std::out_of_range("mode index " + std::to_string(p) + " out of range [0, " +
                            std::to_string(n) + ")");
  }
  const std::uint64_t target = std::uint64_t{1} << p;
  const std::uint64_t tail = target - 1;  // Z on qubits p-1 .. 0
  const PauliString x_part(n, target, tail);
  const PauliString y_part(n, target, tail | target);
  return PauliSum(n, {{cplx(0.5, 0.0), x_part}, {cplx(0.0, 0.5 * y_sign), y_part}});
}

}  // namespace

FermionHamiltonian::FermionHamiltonian(int n)
    : n_modes(n),
      one_body(static_cast<std::size_t>(n) * n, 0.0),
      two_body(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

void FermionHamiltonian::validate() const {
  if (n_modes < 1) throw DimensionError("n_modes must be positive");
  const auto n = static_cast<std::size_t>(n_modes);
  if (one_body.size() != n * n) throw DimensionError("one_body must be n_modes x n_modes");
  if (two_body.size() != n * n * n * n) throw DimensionError("two_body must have n_modes^4 entries");
  for (int p = 0; p < n_modes; ++p) {
    for (int q = 0; q < p; ++q) {
      if (std::abs(t(p, q) - t(q, p)) > 1e-12) {
        throw DimensionError("one_body is not symmetric at (" + std::to_string(p) + ", " +
                             std::to_string(q) + ")");
      }
    }
  }
}

PauliSum jw_annihilation(int p, int n) { return ladder(p, n, +1.0); }

PauliSum jw_creation(int p, int n) { return ladder(p, n, -1.0); }

PauliSum map_fermionic(const FermionHamiltonian& h) {
  h.validate();
  const int n = h.n_modes;
  std::vector<PauliSum> create, destroy;
  for (int p = 0; p < n; ++p) {
    create.push_back(jw_creation(p, n));
    destroy.push_back(jw_annihilation(p, n));
  }
  PauliSum result(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double t = h.t(p, q);
      if (t != 0.0) result = result + (create[p] * destroy[q]) * cplx(t, 0.0);
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const PauliSum pq = create[p] * create[q];
      if (pq.empty()) continue;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const double u = h.u(p, q, r, s);
          if (u != 0.0) result = result + (pq * (destroy[r] * destroy[s])) * cplx(u, 0.0);
        }
      }
    }
  }
  return result;
}

}  // namespace zvlab
