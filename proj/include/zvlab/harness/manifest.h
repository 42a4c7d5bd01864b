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

#ifndef ZVLAB_HARNESS_MANIFEST_H
#define ZVLAB_HARNESS_MANIFEST_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "zvlab/harness/csv.h"

namespace zvlab::harness {

/// Bumped whenever a CSV column is added, removed or reordered.
inline constexpr int kCsvSchemaVersion = 1;

struct TaskSeed {
  std::string stream;
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
};

/// Hands out per-task seeds derived from the master seed and records them.
class SeedBook {
 public:
  explicit SeedBook(std::uint64_t master) : master_(master) {}
  std::uint64_t master() const { return master_; }
  std::uint64_t seed(const std::string& stream, std::uint64_t index);
  std::vector<TaskSeed> entries() const;

 private:
  std::uint64_t master_;
  mutable std::mutex mutex_;
  std::vector<TaskSeed> entries_;
};

/// Everything an experiment produces; written by write_outputs.
struct ExperimentOutput {
  std::string experiment;
  nlohmann::json config;  // fully resolved, including the seed
  std::uint64_t master_seed = 0;
  std::vector<TaskSeed> task_seeds;
  std::map<std::string, CsvTable> tables;             // file name -> table
  std::map<std::string, nlohmann::json> documents;    // file name -> JSON artifact
  nlohmann::json summary = nlohmann::json::object();
  double wall_clock_seconds = 0.0;
};

nlohmann::json manifest_json(const ExperimentOutput& out);

/// Writes every table and document plus manifest.json into `dir`.
void write_outputs(const ExperimentOutput& out, const std::filesystem::path& dir);

/// If `doc` is a manifest written by write_outputs, returns its config
/// section (which carries the seed); otherwise returns `doc` unchanged.
/// Throws ParseError if the manifest belongs to a different experiment.
nlohmann::json config_from_document(const nlohmann::json& doc, const std::string& experiment);

}  // namespace zvlab::harness

#endif  // ZVLAB_HARNESS_MANIFEST_H
