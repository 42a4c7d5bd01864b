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

#ifndef ZVLAB_HARNESS_EXPERIMENTS_H
#define ZVLAB_HARNESS_EXPERIMENTS_H

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zvlab/harness/manifest.h"
#include "zvlab/qemcmc.h"

namespace zvlab::harness {

struct RunOptions {
  int threads = 1;
};

/// One (ansatz, M) cell of the estimator-noise versus accuracy table.
struct Fig2Row {
  std::string estimator;       // "pauli" | "vmc"
  std::string ansatz;          // "hv", "jastrow" or "exact"
  double parameter = 0.0;      // depth (hv), lambda_1 (jastrow), nan (exact)
  std::int64_t M = 0;          // shots per group (pauli) or samples (vmc)
  double relative_error = 0.0;  // exact |E_var - E_0| / |E_0|
  double std = 0.0;             // spread of the repeated estimates
  double mean_energy = 0.0;
  double mean_stderr = 0.0;     // average self-reported stderr
  std::int64_t shots_per_setup = 0;
  std::int64_t total_shots = 0;  // over all repetitions
};

struct HVOptimum {
  int depth = 0;
  double energy = 0.0;
  double relative_error = 0.0;
  bool converged = false;
  int iterations = 0;
  std::vector<double> theta;
};

struct Fig2Result {
  double e0 = 0.0;
  std::vector<HVOptimum> hv;
  std::vector<Fig2Row> rows;
};

struct GapRow {
  std::int64_t instance_id = 0;
  int L = 0;
  double beta = 0.0;
  std::string proposal;
  double delta = 0.0;  // nan when the kernel could not be built
  double tau = 0.0;    // windowed integrated autocorrelation time of the energy
  double acceptance_rate = 0.0;
  bool reducible = false;
  std::string status = "ok";
};

/// Experiment names as used on the command line.
const std::vector<std::string>& experiment_names();
nlohmann::json default_config(const std::string& experiment);

Fig2Result fig2_experiment(const nlohmann::json& config, const RunOptions& options, SeedBook& seeds);
std::vector<GapRow> gap_sweep(const nlohmann::json& config, const RunOptions& options, SeedBook& seeds);

CsvTable fig2_table(const std::vector<Fig2Row>& rows);
CsvTable gap_table(const std::vector<GapRow>& rows);

/// Instance files: {L, topology, couplings, fields, seed}.
nlohmann::json instance_to_json(const ClassicalSpinModel& model, std::uint64_t seed);
ClassicalSpinModel instance_from_json(const nlohmann::json& doc);

/// Resolves `overrides` against the experiment defaults, runs it and collects
/// tables, documents, summary and seeds. The master seed is config["seed"].
ExperimentOutput run_experiment(const std::string& experiment, const nlohmann::json& overrides,
                                const RunOptions& options = {});

}  // namespace zvlab::harness

#endif  // ZVLAB_HARNESS_EXPERIMENTS_H
