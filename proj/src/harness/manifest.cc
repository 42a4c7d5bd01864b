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

#include "zvlab/harness/manifest.h"

#include <algorithm>
#include <fstream>

#include "zvlab/errors.h"
#include "zvlab/rng.h"

namespace zvlab::harness {

std::uint64_t SeedBook::seed(const std::string& stream, std::uint64_t index) {
  const std::uint64_t s = derive_seed(master_, stream, index);
  std::lock_guard lock(mutex_);
  entries_.push_back({stream, index, s});
  return s;
}

std::vector<TaskSeed> SeedBook::entries() const {
  std::lock_guard lock(mutex_);
  auto out = entries_;
  std::sort(out.begin(), out.end(), [](const TaskSeed& a, const TaskSeed& b) {
    return a.stream != b.stream ? a.stream < b.stream : a.index < b.index;
  });
  return out;
}

nlohmann::json manifest_json(const ExperimentOutput& out) {
  nlohmann::json seeds = nlohmann::json::array();
  for (const auto& t : out.task_seeds) seeds.push_back({{"stream", t.stream}, {"index", t.index}, {"seed", t.seed}});
  nlohmann::json files = nlohmann::json::array();
  for (const auto& [name, table] : out.tables) {
    files.push_back({{"file", name}, {"rows", table.size()}, {"columns", table.header()}});
  }
  for (const auto& [name, doc] : out.documents) files.push_back({{"file", name}});
  return {
      {"experiment", out.experiment},
      {"version", ZVLAB_VERSION},
      {"csv_schema_version", kCsvSchemaVersion},
      {"master_seed", out.master_seed},
      {"seed_derivation", "mix64(mix64(mix64(master) ^ fnv1a(stream)) ^ index)"},
      {"config", out.config},
      {"task_seeds", seeds},
      {"outputs", files},
      {"summary", out.summary},
      {"wall_clock_seconds", out.wall_clock_seconds},
  };
}

void write_outputs(const ExperimentOutput& out, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, table] : out.tables) table.write(dir / name);
  for (const auto& [name, doc] : out.documents) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
    f << doc.dump(2) << "\n";
  }
  // Written last: a run without a manifest did not finish.
  std::ofstream f(dir / "manifest.json", std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
  f << manifest_json(out).dump(2) << "\n";
}

nlohmann::json config_from_document(const nlohmann::json& doc, const std::string& experiment) {
  if (!doc.is_object() || !doc.contains("experiment") || !doc.contains("config")) return doc;
  if (doc["experiment"] != experiment) {
    throw ParseError("manifest is for experiment '" + doc["experiment"].get<std::string>() + "', not '" +
                     experiment + "'");
  }
  return doc["config"];
}

}  // namespace zvlab::harness
