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

#ifndef ZVLAB_HARNESS_CONFIG_H
#define ZVLAB_HARNESS_CONFIG_H

#include <filesystem>
#include <string>

#include <json.hpp>

namespace zvlab::harness {

/// Parses the key-value config format:
///
///   # comment
///   model.L = 10
///   depths = 12, 16, 20, 24
///   optimizer.method = bfgs
///
/// Dotted keys nest; comma-separated values become arrays; numbers, true/false
/// and bare strings are typed automatically. A document starting with '{' is
/// read as JSON instead.
nlohmann::json parse_config(const std::string& text, const std::string& origin = "<config>");
nlohmann::json load_config(const std::filesystem::path& path);

/// Renders a JSON object back into the key-value format (round-trips through
/// parse_config for scalar and flat-array leaves).
std::string to_key_value(const nlohmann::json& config);

/// defaults with `overrides` merged in; unknown keys are rejected with the
/// dotted path in the message.
nlohmann::json resolve(const nlohmann::json& defaults, const nlohmann::json& overrides);

}  // namespace zvlab::harness

#endif  // ZVLAB_HARNESS_CONFIG_H
