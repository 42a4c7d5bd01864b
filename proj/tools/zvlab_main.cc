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

// Command-line front end: one subcommand per experiment.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zvlab/harness/config.h"
#include "zvlab/harness/experiments.h"
#include "zvlab/harness/manifest.h"

namespace {

namespace h = zvlab::harness;

const char* description(const std::string& name) {
  if (name == "fig2") return "estimator noise versus accuracy table (HV + Pauli, Jastrow + VMC)";
  if (name == "gap-sweep") return "exact spectral gaps and chain diagnostics over L, beta and proposals";
  if (name == "vqe-run") return "noiseless HV optimization followed by repeated shot-noise estimates";
  if (name == "vmc-run") return "Jastrow stochastic reconfiguration followed by repeated VMC estimates";
  if (name == "qemcmc-run") return "quantum-enhanced or classical Metropolis chains on a spin model";
  return "map a fermionic Hamiltonian (or a TFIM chain) to a Pauli sum";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zvlab: variational and quantum-enhanced Monte Carlo experiments"};
  app.set_version_flag("--version", ZVLAB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  int threads = 1;
  std::vector<std::string> sets;
  bool print_config = false;
  app.add_option("--config", config_path, "key-value or JSON config file; a manifest.json re-runs that run")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "master seed (overrides the config)");
  app.add_option("--out", out_dir, "output directory (default: out/<subcommand>)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--set", sets, "inline override, e.g. --set model.L=8 (repeatable)");
  app.add_flag("--print-config", print_config, "print the resolved config and exit");

  std::string jw_input;
  int jw_tfim = 0;
  for (const auto& name : h::experiment_names()) {
    auto* sub = app.add_subcommand(name, description(name));
    if (name == "jw-map") {
      sub->add_option("--input", jw_input, "FermionHamiltonian JSON file")->check(CLI::ExistingFile);
      sub->add_option("--tfim", jw_tfim, "export the periodic TFIM chain of this length instead");
    }
  }
  CLI11_PARSE(app, argc, argv);

  const std::string experiment = app.get_subcommands().front()->get_name();
  try {
    nlohmann::json overrides = nlohmann::json::object();
    if (!config_path.empty()) overrides = h::config_from_document(h::load_config(config_path), experiment);
    if (!sets.empty()) {
      std::string text;
      for (const auto& s : sets) text += s + "\n";
      overrides.merge_patch(h::parse_config(text, "--set"));
    }
    if (seed) overrides["seed"] = *seed;
    if (!jw_input.empty()) overrides["input"] = jw_input;
    if (jw_tfim > 0) overrides["tfim"]["L"] = jw_tfim;

    if (print_config) {
      std::cout << h::to_key_value(h::resolve(h::default_config(experiment), overrides));
      return 0;
    }
    const auto output = h::run_experiment(experiment, overrides, h::RunOptions{threads});
    const std::string dir = out_dir.empty() ? "out/" + experiment : out_dir;
    h::write_outputs(output, dir);
    for (const auto& [file, table] : output.tables) std::cout << dir << "/" << file << " (" << table.size() << " rows)\n";
    for (const auto& [file, doc] : output.documents) std::cout << dir << "/" << file << "\n";
    std::cout << dir << "/manifest.json\n" << output.summary.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "zvlab " << experiment << ": error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
