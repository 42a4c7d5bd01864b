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

#ifndef ZVLAB_GROUPING_H
#define ZVLAB_GROUPING_H

#include <cstddef>
#include <string>
#include <vector>

#include "zvlab/pauli.h"

namespace zvlab {

/// Partition of the non-identity terms of a PauliSum into sets that can be
/// read off one shot record each.
struct MeasurementGroups {
  /// Indices into PauliSum::terms().
  std::vector<std::vector<std::size_t>> groups;
  /// Per group, one basis letter per qubit ('Z', 'X' or 'Y'); entry k is qubit k.
  /// Qubits no member touches are measured in Z.
  std::vector<std::string> bases;

  std::size_t size() const { return groups.size(); }
};

/// Greedy first-fit over terms ordered by descending |h_j| (ties by index).
MeasurementGroups group_qubitwise(const PauliSum& h);

/// Every non-identity term in its own group: the independent-measurement
/// scheme assumed by the textbook shot-noise formula.
MeasurementGroups singleton_groups(const PauliSum& h);

/// Checks the partition and pairwise qubit-wise commutation.
bool is_valid_grouping(const PauliSum& h, const MeasurementGroups& g);

}  // namespace zvlab

#endif  // ZVLAB_GROUPING_H
