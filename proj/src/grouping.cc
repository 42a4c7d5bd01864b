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

#include "zvlab/grouping.h"

#include <algorithm>
#include <numeric>

namespace zvlab {
namespace {

std::string basis_of(const PauliSum& h, const std::vector<std::size_t>& members) {
  std::string basis(static_cast<std::size_t>(h.n_qubits()), 'Z');
  for (const auto j : members) {
    const auto& s = h.terms()[j].string;
    for (int q = 0; q < h.n_qubits(); ++q) {
      const char c = s.letter(q);
      if (c != 'I') basis[static_cast<std::size_t>(q)] = c;
    }
  }
  return basis;
}

}  // namespace

MeasurementGroups group_qubitwise(const PauliSum& h) {
  const auto& terms = h.terms();
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (!terms[j].string.is_identity()) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(terms[a].coeff) > std::abs(terms[b].coeff);
  });

  MeasurementGroups out;
  // Union string per group: letters fixed so far (a valid group is qubit-wise
  // compatible with its union).
  std::vector<PauliString> unions;
  for (const auto j : order) {
    const auto& s = terms[j].string;
    bool placed = false;
    for (std::size_t g = 0; g < out.groups.size(); ++g) {
      if (commute_qubitwise(unions[g], s)) {
        out.groups[g].push_back(j);
        unions[g] = PauliString(h.n_qubits(), unions[g].x_mask() | s.x_mask(),
                                unions[g].z_mask() | s.z_mask());
        placed = true;
        break;
      }
    }
    if (!placed) {
      out.groups.push_back({j});
      unions.push_back(s);
    }
  }
  for (const auto& g : out.groups) out.bases.push_back(basis_of(h, g));
  return out;
}

MeasurementGroups singleton_groups(const PauliSum& h) {
  MeasurementGroups out;
  for (std::size_t j = 0; j < h.terms().size(); ++j) {
    if (h.terms()[j].string.is_identity()) continue;
    out.groups.push_back({j});
    out.bases.push_back(basis_of(h, out.groups.back()));
  }
  return out;
}

bool is_valid_grouping(const PauliSum& h, const MeasurementGroups& g) {
  const auto& terms = h.terms();
  if (g.bases.size() != g.groups.size()) return false;
  std::vector<int> seen(terms.size(), 0);
  for (const auto& members : g.groups) {
    for (const auto j : members) {
      if (j >= terms.size() || terms[j].string.is_identity()) return false;
      ++seen[j];
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!commute_qubitwise(terms[members[a]].string, terms[members[b]].string)) return false;
      }
    }
  }
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const int expected = terms[j].string.is_identity() ? 0 : 1;
    if (seen[j] != expected) return false;
  }
  return true;
}

}  // namespace zvlab
