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

#ifndef ZVLAB_SERIALIZATION_H
#define ZVLAB_SERIALIZATION_H

#include <filesystem>
#include <string>

#include <json.hpp>

#include "zvlab/fermion.h"
#include "zvlab/pauli.h"

namespace zvlab {

inline constexpr const char* kPauliOrdering = "leftmost character = highest qubit index";

/// {"n_qubits": n, "ordering": "...", "terms": [{"coeff": [re, im], "string": "XZIY"}]}
nlohmann::json pauli_sum_to_json(const PauliSum& h);
PauliSum pauli_sum_from_json(const nlohmann::json& doc);

/// {"n_modes": n, "one_body": [[...]], "two_body": [[[[...]]]]}
FermionHamiltonian fermion_from_json(const nlohmann::json& doc);
nlohmann::json fermion_to_json(const FermionHamiltonian& h);

/// Reads and parses a JSON file; syntax errors carry line and column.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace zvlab

#endif  // ZVLAB_SERIALIZATION_H
