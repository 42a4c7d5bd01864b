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

#include "zvlab/harness/experiments.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "zvlab/errors.h"
#include "zvlab/fermion.h"
#include "zvlab/grouping.h"
#include "zvlab/harness/config.h"
#include "zvlab/harness/parallel.h"
#include "zvlab/hv_ansatz.h"
#include "zvlab/pauli_estimator.h"
#include "zvlab/serialization.h"
#include "zvlab/spectrum.h"
#include "zvlab/vmc.h"
#include "zvlab/vqe.h"

namespace zvlab::harness {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---- config access -------------------------------------------------------

template <class T>
T get(const json& config, const std::string& key) {
  const json* node = &config;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!node->contains(part)) throw ParseError("missing config key '" + key + "'");
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  try {
    return node->get<T>();
  } catch (const json::exception&) {
    throw ParseError("config key '" + key + "' has the wrong type");
  }
}

// A scalar where a list is expected counts as a one-element list.
template <class T>
std::vector<T> get_list(const json& config, const std::string& key) {
  json node = get<json>(config, key);
  if (!node.is_array()) node = json::array({node});
  std::vector<T> out;
  for (const auto& v : node) {
    try {
      out.push_back(v.get<T>());
    } catch (const json::exception&) {
      throw ParseError("config key '" + key + "' has an element of the wrong type");
    }
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

TFIMModel tfim_from(const json& config) {
  TFIMModel m{get<int>(config, "model.L"), get<double>(config, "model.J"), get<double>(config, "model.Gamma")};
  require(m.L >= 2, "model.L must be at least 2");
  return m;
}

json model_echo(const TFIMModel& m) { return {{"L", m.L}, {"J", m.J}, {"Gamma", m.Gamma}, {"boundary", "periodic"}}; }

StoppingRule stopping_from(const json& config) {
  StoppingRule rule;
  rule.max_iterations = get<int>(config, "optimizer.max_iter");
  require(rule.max_iterations >= 1, "optimizer.max_iter must be positive");
  return rule;
}

NoiselessOptions noiseless_from(const json& config) {
  NoiselessOptions o;
  o.method = parse_optimizer_method(get<std::string>(config, "optimizer.method"));
  o.restarts = get<int>(config, "optimizer.restarts");
  require(o.restarts >= 1, "optimizer.restarts must be positive");
  o.rule = stopping_from(config);
  return o;
}

ChainSettings chain_from(const json& config) {
  ChainSettings c;
  c.burn_in = get<std::int64_t>(config, "chain.burn_in");
  c.thinning = get<std::int64_t>(config, "chain.thinning");
  return c;
}

QuantumProposalConfig quantum_from(const json& config) {
  QuantumProposalConfig q;
  q.gamma_min = get<double>(config, "quantum.gamma_min");
  q.gamma_max = get<double>(config, "quantum.gamma_max");
  q.t_min = get<double>(config, "quantum.t_min");
  q.t_max = get<double>(config, "quantum.t_max");
  q.mixing = get<double>(config, "quantum.mixing");
  const auto evolution = get<std::string>(config, "quantum.evolution");
  if (evolution == "exact") {
    q.evolution = Evolution::exact();
  } else if (evolution == "trotter") {
    q.evolution = Evolution::trotter(get<int>(config, "quantum.trotter_steps"));
  } else {
    throw ParseError("quantum.evolution must be 'exact' or 'trotter', got '" + evolution + "'");
  }
  q.validate();
  return q;
}

json quantum_defaults() {
  return {{"gamma_min", 0.1}, {"gamma_max", 0.6}, {"t_min", 2.0},        {"t_max", 20.0},
          {"evolution", "exact"}, {"trotter_steps", 20}, {"mixing", 0.0}};
}

// ---- statistics ------------------------------------------------------------

double sample_std(const std::vector<double>& v) {
  if (v.size() < 2) return kNaN;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? kNaN : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double ground_energy(const TFIMModel& m) { return exact_spectrum(m.as_pauli_sum(), 1).front().value; }

double relative_error(double e, double e0) { return std::abs(e - e0) / std::abs(e0); }

// Repeated estimates summarized into one table cell.
struct Repeated {
  std::vector<double> means;
  std::vector<double> stderrs;
  std::int64_t shots = 0;
};

template <class Estimate>
Repeated repeat(int repetitions, Rng& rng, Estimate&& estimate) {
  Repeated r;
  for (int i = 0; i < repetitions; ++i) {
    const EnergyEstimate e = estimate(rng);
    r.means.push_back(e.mean);
    r.stderrs.push_back(e.stderr);
    r.shots += e.shots_used;
  }
  return r;
}

// ---- fig2 ------------------------------------------------------------------

json fig2_defaults() {
  return {{"seed", 1},
          {"model", {{"L", 10}, {"J", 1.0}, {"Gamma", 1.0}}},
          {"depths", {12, 16, 20, 24}},
          {"lambda1", {-0.15, -0.05, 0.05, 0.12, 0.18, 0.22}},
          {"lambda_rest", {0.057, 0.030, 0.022, 0.010}},
          {"shots", {100, 1000, 100000}},
          {"repetitions", 100},
          {"exact_row", true},
          {"optimizer", {{"method", "bfgs"}, {"restarts", 8}, {"max_iter", 50000}}},
          {"chain", {{"burn_in", -1}, {"thinning", -1}}}};
}

// ---- gap sweep ---------------------------------------------------------------

json gap_defaults() {
  return {{"seed", 1},
          {"L_list", {4, 6}},
          {"beta_list", {1.0, 2.0}},
          {"proposals", {"quantum", "single-flip", "uniform"}},
          {"instances", 10},
          {"topology", "fully-connected"},
          {"steps", 2000},
          {"K", 32},
          {"quantum", quantum_defaults()}};
}

json vqe_defaults() {
  return {{"seed", 1},
          {"model", {{"L", 8}, {"J", 1.0}, {"Gamma", 1.0}}},
          {"depth", 4},
          {"shots_per_group", 1000},
          {"repetitions", 100},
          {"optimizer", {{"method", "bfgs"}, {"restarts", 8}, {"max_iter", 50000}}}};
}

json vmc_defaults() {
  return {{"seed", 1},
          {"model", {{"L", 10}, {"J", 1.0}, {"Gamma", 1.0}}},
          {"lambda", json::array()},
          {"samples", 1000},
          {"repetitions", 100},
          {"sr", {{"steps", 200}, {"samples", 1000}, {"delta", 0.05}, {"relative_regularization", 1e-3}}},
          {"chain", {{"burn_in", -1}, {"thinning", -1}}}};
}

json qemcmc_defaults() {
  return {{"seed", 1},
          {"model", {{"kind", "spin-glass"}, {"L", 6}, {"topology", "fully-connected"}, {"J", 1.0}, {"instance", ""}}},
          {"beta", 2.0},
          {"proposal", "quantum"},
          {"steps", 10000},
          {"replicas", 1},
          {"record_every", 1},
          {"exact_gap", true},
          {"K", 32},
          {"quantum", quantum_defaults()}};
}

json jw_defaults() {
  return {{"seed", 1}, {"input", ""}, {"tfim", {{"L", 0}, {"J", 1.0}, {"Gamma", 1.0}}}};
}

// ---- experiment bodies -------------------------------------------------------

void run_fig2(const json& config, const RunOptions& options, SeedBook& seeds, ExperimentOutput& out) {
  const Fig2Result result = fig2_experiment(config, options, seeds);
  out.tables.emplace("fig2.csv", fig2_table(result.rows));

  CsvTable vmc({"lambda_1", "relative_error", "stderr", "M_vmc"});
  bool budget_ok = true;
  const auto repetitions = get<std::int64_t>(config, "repetitions");
  for (const auto& r : result.rows) {
    if (r.estimator == "vmc" && r.ansatz == "jastrow") vmc.add_row({r.parameter, r.relative_error, r.std, r.M});
    if (r.estimator == "pauli" && r.total_shots != shot_budget(r.shots_per_setup / r.M, r.M, repetitions)) {
      budget_ok = false;
    }
  }
  out.tables.emplace("fig2_vmc.csv", std::move(vmc));

  json hv = json::array();
  for (const auto& h : result.hv) {
    hv.push_back({{"depth", h.depth},
                  {"energy", h.energy},
                  {"relative_error", h.relative_error},
                  {"converged", h.converged},
                  {"iterations", h.iterations}});
  }
  out.summary = {{"model", model_echo(tfim_from(config))},
                 {"e0", result.e0},
                 {"hv_optima", hv},
                 {"shot_budget_consistent", budget_ok},
                 {"chain", {{"burn_in", chain_from(config).resolved_burn_in(get<int>(config, "model.L"))},
                            {"thinning", chain_from(config).resolved_thinning(get<int>(config, "model.L"))},
                            {"stderr", "batch means, 16 batches"}}}};
}

void run_gap(const json& config, const RunOptions& options, SeedBook& seeds, ExperimentOutput& out) {
  const auto rows = gap_sweep(config, options, seeds);
  out.tables.emplace("gap_sweep.csv", gap_table(rows));
  std::int64_t failures = 0;
  for (const auto& r : rows) failures += r.status != "ok";
  out.summary = {{"rows", rows.size()}, {"rows_with_errors", failures}};
}

void run_vqe(const json& config, const RunOptions& options, SeedBook& seeds, ExperimentOutput& out) {
  const TFIMModel model = tfim_from(config);
  const int depth = get<int>(config, "depth");
  const auto shots = get<std::int64_t>(config, "shots_per_group");
  const int repetitions = get<int>(config, "repetitions");
  require(depth >= 1, "depth must be positive");
  require(shots >= 1, "shots_per_group must be positive");
  require(repetitions >= 1, "repetitions must be positive");

  Rng opt_rng(seeds.seed("vqe-run/optimize", 0));
  const VQEResult opt = optimize_noiseless(HVAnsatz(model, depth), noiseless_from(config), opt_rng);
  const StateVector state = prepare(opt.ansatz);
  const PauliSum h = model.as_pauli_sum();
  const MeasurementGroups groups = group_qubitwise(h);
  const ShotPlan plan = ShotPlan::uniform(groups.size(), shots);

  std::vector<std::uint64_t> task_seeds;
  for (int r = 0; r < repetitions; ++r) task_seeds.push_back(seeds.seed("vqe-run/estimate", static_cast<std::uint64_t>(r)));
  const auto estimates = parallel_map<EnergyEstimate>(static_cast<std::size_t>(repetitions), options.threads,
                                                      [&](std::size_t r) {
                                                        Rng rng(task_seeds[r]);
                                                        return estimate_energy_pauli(state, h, groups, plan, rng);
                                                      });
  CsvTable table({"repetition", "mean", "stderr"});
  std::vector<double> means;
  for (std::size_t r = 0; r < estimates.size(); ++r) {
    table.add_row({static_cast<std::int64_t>(r), estimates[r].mean, estimates[r].stderr});
    means.push_back(estimates[r].mean);
  }
  out.tables.emplace("estimates.csv", std::move(table));

  json summary = {{"model", model_echo(model)},
                  {"depth", depth},
                  {"e_var", opt.energy},
                  {"theta", opt.ansatz.params},
                  {"converged", opt.converged},
                  {"iterations", opt.iterations},
                  {"best_restart", opt.best_restart},
                  {"n_groups", groups.size()},
                  {"bases", groups.bases},
                  {"predicted_error", predicted_error(state, h, groups, plan)},
                  {"std_over_repetitions", sample_std(means)},
                  {"shot_budget", shot_budget(static_cast<std::int64_t>(groups.size()), shots, repetitions)}};
  if (model.L <= kMaxDenseQubits) {
    const double e0 = ground_energy(model);
    summary["e0"] = e0;
    summary["relative_error"] = relative_error(opt.energy, e0);
  }
  out.summary = summary;
}

void run_vmc(const json& config, const RunOptions& options, SeedBook& seeds, ExperimentOutput& out) {
  const TFIMModel model = tfim_from(config);
  require(model.L % 2 == 0, "the Jastrow ansatz needs an even model.L");
  const auto samples = get<std::int64_t>(config, "samples");
  const int repetitions = get<int>(config, "repetitions");
  require(samples >= 1 && repetitions >= 1, "samples and repetitions must be positive");
  const ChainSettings chain = chain_from(config);

  std::vector<double> lambda = get_list<double>(config, "lambda");
  if (lambda.empty()) lambda.assign(static_cast<std::size_t>(model.L / 2), 0.0);
  JastrowAnsatz ansatz(model.L, lambda);

  const bool have_e0 = model.L <= kMaxDenseQubits;
  const double e0 = have_e0 ? ground_energy(model) : kNaN;

  const int sr_steps = get<int>(config, "sr.steps");
  if (sr_steps > 0) {
    SRSettings sr;
    sr.delta = get<double>(config, "sr.delta");
    sr.relative_regularization = get<double>(config, "sr.relative_regularization");
    Rng rng(seeds.seed("vmc-run/sr", 0));
    const SRRun run = sr_optimize(ansatz, model, sr_steps, get<std::int64_t>(config, "sr.samples"), rng, sr, chain);
    CsvTable trace({"step", "energy", "relative_error"});
    for (std::size_t s = 0; s < run.energies.size(); ++s) {
      trace.add_row({static_cast<std::int64_t>(s), run.energies[s], have_e0 ? relative_error(run.energies[s], e0) : kNaN});
    }
    out.tables.emplace("sr_trace.csv", std::move(trace));
    ansatz = run.ansatz;
  }

  std::vector<std::uint64_t> task_seeds;
  for (int r = 0; r < repetitions; ++r) task_seeds.push_back(seeds.seed("vmc-run/estimate", static_cast<std::uint64_t>(r)));
  const auto estimates = parallel_map<EnergyEstimate>(static_cast<std::size_t>(repetitions), options.threads,
                                                      [&](std::size_t r) {
                                                        Rng rng(task_seeds[r]);
                                                        return estimate_energy_vmc(ansatz, model, samples, rng, chain);
                                                      });
  CsvTable table({"repetition", "mean", "stderr"});
  std::vector<double> means;
  for (std::size_t r = 0; r < estimates.size(); ++r) {
    table.add_row({static_cast<std::int64_t>(r), estimates[r].mean, estimates[r].stderr});
    means.push_back(estimates[r].mean);
  }
  out.tables.emplace("estimates.csv", std::move(table));

  const double e_var = enumerate_energy(ansatz, model);
  out.summary = {{"model", model_echo(model)},
                 {"lambda", ansatz.lambda()},
                 {"e_var", e_var},
                 {"std_over_repetitions", sample_std(means)},
                 {"chain", {{"burn_in", chain.resolved_burn_in(model.L)},
                            {"thinning", chain.resolved_thinning(model.L)},
                            {"stderr", "batch means, 16 batches"}}}};
  if (have_e0) {
    out.summary["e0"] = e0;
    out.summary["relative_error"] = relative_error(e_var, e0);
  }
}

void run_qemcmc(const json& config, const RunOptions& options, SeedBook& seeds, ExperimentOutput& out) {
  const auto instance_path = get<std::string>(config, "model.instance");
  std::uint64_t instance_seed = 0;
  std::optional<ClassicalSpinModel> model;
  if (!instance_path.empty()) {
    const json doc = read_json_file(instance_path);
    model = instance_from_json(doc);
    instance_seed = doc.value("seed", std::uint64_t{0});
  } else {
    const auto kind = get<std::string>(config, "model.kind");
    const int L = get<int>(config, "model.L");
    if (kind == "ferromagnet") {
      model = ClassicalSpinModel::ferromagnetic_chain(L, get<double>(config, "model.J"));
    } else if (kind == "spin-glass") {
      instance_seed = seeds.seed("qemcmc-run/instance", 0);
      Rng rng(instance_seed);
      model = ClassicalSpinModel::random_spin_glass(L, parse_topology(get<std::string>(config, "model.topology")), rng);
    } else {
      throw ParseError("model.kind must be 'spin-glass' or 'ferromagnet', got '" + kind + "'");
    }
  }
  out.documents.emplace("instance.json", instance_to_json(*model, instance_seed));

  const double beta = get<double>(config, "beta");
  const auto steps = get<std::int64_t>(config, "steps");
  const int replicas = get<int>(config, "replicas");
  const auto every = get<std::int64_t>(config, "record_every");
  require(beta >= 0.0, "beta must be non-negative");
  require(steps >= 1 && replicas >= 1 && every >= 1, "steps, replicas and record_every must be positive");
  ProposalSpec spec{parse_proposal(get<std::string>(config, "proposal")), quantum_from(config)};

  std::vector<std::uint64_t> chain_seeds;
  for (int r = 0; r < replicas; ++r) chain_seeds.push_back(seeds.seed("qemcmc-run/chain", static_cast<std::uint64_t>(r)));
  struct Trace {
    std::vector<double> energy, magnetization;
    ChainDiagnostics diagnostics;
  };
  const auto traces = parallel_map<Trace>(static_cast<std::size_t>(replicas), options.threads, [&](std::size_t r) {
    Rng rng(chain_seeds[r]);
    const ChainResult chain = run_chain(*model, spec, beta, steps, rng);
    Trace t{{}, {}, chain.diagnostics};
    for (const auto& x : chain.samples) {
      t.energy.push_back(model->energy(x));
      t.magnetization.push_back(x.magnetization());
    }
    return t;
  });

  CsvTable trace({"replica", "step", "energy", "magnetization"});
  CsvTable diag({"replica", "acceptance_rate", "tau_energy", "tau_magnetization"});
  std::vector<std::vector<double>> mags;
  for (std::size_t r = 0; r < traces.size(); ++r) {
    const auto& t = traces[r];
    for (std::size_t s = 0; s < t.energy.size(); s += static_cast<std::size_t>(every)) {
      trace.add_row({static_cast<std::int64_t>(r), static_cast<std::int64_t>(s), t.energy[s], t.magnetization[s]});
    }
    diag.add_row({static_cast<std::int64_t>(r), t.diagnostics.acceptance_rate, t.diagnostics.tau_energy,
                  t.diagnostics.tau_magnetization});
    mags.push_back(t.magnetization);
  }
  out.tables.emplace("trace.csv", std::move(trace));
  out.tables.emplace("diagnostics.csv", std::move(diag));

  out.summary = {{"L", model->length()}, {"beta", beta}, {"proposal", to_string(spec.kind)}, {"steps", steps}};
  if (replicas >= 2) out.summary["replica_tau_magnetization"] = replica_autocorrelation_time(mags);
  if (get<bool>(config, "exact_gap")) {
    try {
      TransitionMatrix t;
      switch (spec.kind) {
        case ProposalKind::kQuantum: {
          Rng rng(seeds.seed("qemcmc-run/quadrature", 0));
          t = build_proposal_matrix(*model, spec.quantum, get<int>(config, "K"), rng);
          break;
        }
        case ProposalKind::kSingleFlip:
          t = single_flip_proposal_matrix(model->length());
          break;
        case ProposalKind::kUniform:
          t = uniform_proposal_matrix(model->length());
          break;
      }
      const SpectralGap gap = spectral_gap(assemble_kernel(t, *model, beta).kernel);
      out.summary["gap"] = gap.delta;
      out.summary["reducible"] = gap.reducible;
    } catch (const CapacityError& e) {
      out.summary["gap_error"] = e.what();
    }
  }
}

void run_jw(const json& config, const RunOptions&, SeedBook&, ExperimentOutput& out) {
  const auto input = get<std::string>(config, "input");
  const int tfim_L = get<int>(config, "tfim.L");
  require(input.empty() != (tfim_L == 0), "jw-map needs exactly one of 'input' or 'tfim.L'");
  PauliSum h = input.empty() ? TFIMModel{tfim_L, get<double>(config, "tfim.J"), get<double>(config, "tfim.Gamma")}.as_pauli_sum()
                             : map_fermionic(fermion_from_json(read_json_file(input)));
  const MeasurementGroups groups = group_qubitwise(h);
  out.documents.emplace("pauli_sum.json", pauli_sum_to_json(h));
  CsvTable summary({"n_qubits", "n_terms", "one_norm", "n_groups"});
  summary.add_row({static_cast<std::int64_t>(h.n_qubits()), static_cast<std::int64_t>(h.size()), one_norm(h),
                   static_cast<std::int64_t>(groups.size())});
  out.tables.emplace("summary.csv", std::move(summary));
  out.summary = {{"source", input.empty() ? "tfim" : input},
                 {"n_qubits", h.n_qubits()},
                 {"N_P", h.size()},
                 {"one_norm", one_norm(h)},
                 {"N_groups", groups.size()},
                 {"bases", groups.bases}};
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"fig2", "gap-sweep", "vqe-run", "vmc-run", "qemcmc-run", "jw-map"};
  return names;
}

nlohmann::json default_config(const std::string& experiment) {
  if (experiment == "fig2") return fig2_defaults();
  if (experiment == "gap-sweep") return gap_defaults();
  if (experiment == "vqe-run") return vqe_defaults();
  if (experiment == "vmc-run") return vmc_defaults();
  if (experiment == "qemcmc-run") return qemcmc_defaults();
  if (experiment == "jw-map") return jw_defaults();
  throw std::invalid_argument("unknown experiment '" + experiment + "'");
}

Fig2Result fig2_experiment(const nlohmann::json& config, const RunOptions& options, SeedBook& seeds) {
  const TFIMModel model = tfim_from(config);
  require(model.L % 2 == 0, "model.L must be even");
  const auto depths = get_list<int>(config, "depths");
  const auto lambda1 = get_list<double>(config, "lambda1");
  const auto lambda_rest = get_list<double>(config, "lambda_rest");
  const auto shots = get_list<std::int64_t>(config, "shots");
  const int repetitions = get<int>(config, "repetitions");
  const ChainSettings chain = chain_from(config);
  require(repetitions >= 2, "repetitions must be at least 2");
  require(static_cast<int>(lambda_rest.size()) == model.L / 2 - 1, "lambda_rest needs L/2 - 1 entries");
  for (auto d : depths) require(d >= 1, "depths must be positive");
  for (auto m : shots) require(m >= 1, "shots must be positive");

  Fig2Result result;
  const auto spectrum = exact_spectrum(model.as_pauli_sum(), 1);
  result.e0 = spectrum.front().value;
  const PauliSum h = model.as_pauli_sum();
  const MeasurementGroups groups = group_qubitwise(h);
  const auto n_groups = static_cast<std::int64_t>(groups.size());

  // Noiseless optima, one task per depth.
  const NoiselessOptions noiseless = noiseless_from(config);
  std::vector<std::uint64_t> opt_seeds;
  for (std::size_t i = 0; i < depths.size(); ++i) opt_seeds.push_back(seeds.seed("fig2/hv-optimize", i));
  const auto optima = parallel_map<std::optional<VQEResult>>(depths.size(), options.threads, [&](std::size_t i) {
    Rng rng(opt_seeds[i]);
    return std::optional<VQEResult>(optimize_noiseless(HVAnsatz(model, depths[i]), noiseless, rng));
  });
  std::vector<StateVector> states;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const VQEResult& r = *optima[i];
    result.hv.push_back({depths[i], r.energy, relative_error(r.energy, result.e0), r.converged, r.iterations,
                         r.ansatz.params});
    states.push_back(prepare(r.ansatz));
  }

  std::vector<JastrowAnsatz> jastrow;
  std::vector<double> jastrow_error;
  for (double l1 : lambda1) {
    std::vector<double> lambda{l1};
    lambda.insert(lambda.end(), lambda_rest.begin(), lambda_rest.end());
    jastrow.emplace_back(model.L, lambda);
    jastrow_error.push_back(relative_error(enumerate_energy(jastrow.back(), model), result.e0));
  }
  const bool exact_row = get<bool>(config, "exact_row");
  const AmplitudeTableAnsatz exact_ansatz(model.L, spectrum.front().vector.amplitudes());

  // Estimation tasks: (hv depth | jastrow lambda | exact) x M, in table order.
  struct Task {
    int family;  // 0 pauli/hv, 1 vmc/jastrow, 2 vmc/exact
    std::size_t item;
    std::int64_t M;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < depths.size(); ++i)
    for (auto m : shots) tasks.push_back({0, i, m});
  for (std::size_t i = 0; i < lambda1.size(); ++i)
    for (auto m : shots) tasks.push_back({1, i, m});
  if (exact_row)
    for (auto m : shots) tasks.push_back({2, 0, m});
  std::vector<std::uint64_t> task_seeds;
  for (std::size_t t = 0; t < tasks.size(); ++t) task_seeds.push_back(seeds.seed("fig2/estimate", t));

  result.rows = parallel_map<Fig2Row>(tasks.size(), options.threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    Rng rng(task_seeds[t]);
    Fig2Row row;
    row.M = task.M;
    Repeated rep;
    if (task.family == 0) {
      const ShotPlan plan = ShotPlan::uniform(groups.size(), task.M);
      rep = repeat(repetitions, rng, [&](Rng& r) { return estimate_energy_pauli(states[task.item], h, groups, plan, r); });
      row.estimator = "pauli";
      row.ansatz = "hv";
      row.parameter = depths[task.item];
      row.relative_error = result.hv[task.item].relative_error;
      row.shots_per_setup = n_groups * task.M;
    } else {
      const Ansatz& a = task.family == 1 ? static_cast<const Ansatz&>(jastrow[task.item]) : exact_ansatz;
      rep = repeat(repetitions, rng, [&](Rng& r) { return estimate_energy_vmc(a, model, task.M, r, chain); });
      row.estimator = "vmc";
      row.ansatz = task.family == 1 ? "jastrow" : "exact";
      row.parameter = task.family == 1 ? lambda1[task.item] : kNaN;
      row.relative_error = task.family == 1 ? jastrow_error[task.item] : 0.0;
      row.shots_per_setup = task.M;
    }
    row.std = sample_std(rep.means);
    row.mean_energy = mean_of(rep.means);
    row.mean_stderr = mean_of(rep.stderrs);
    row.total_shots = task.family == 0 ? rep.shots : task.M * repetitions;
    return row;
  });
  return result;
}

std::vector<GapRow> gap_sweep(const nlohmann::json& config, const RunOptions& options, SeedBook& seeds) {
  const auto Ls = get_list<int>(config, "L_list");
  const auto betas = get_list<double>(config, "beta_list");
  std::vector<ProposalKind> proposals;
  for (const auto& p : get_list<std::string>(config, "proposals")) proposals.push_back(parse_proposal(p));
  const int instances = get<int>(config, "instances");
  const auto steps = get<std::int64_t>(config, "steps");
  const int K = get<int>(config, "K");
  const Topology topology = parse_topology(get<std::string>(config, "topology"));
  const QuantumProposalConfig quantum = quantum_from(config);
  require(instances >= 1 && steps >= 1 && K >= 1, "instances, steps and K must be positive");
  for (double b : betas) require(b >= 0.0, "beta_list entries must be non-negative");

  const std::size_t per_instance = betas.size() * proposals.size();
  const std::size_t n_instances = Ls.size() * static_cast<std::size_t>(instances);
  struct Seeds {
    std::uint64_t instance, quadrature;
    std::vector<std::uint64_t> chains;
  };
  std::vector<Seeds> task_seeds(n_instances);
  for (std::size_t id = 0; id < n_instances; ++id) {
    task_seeds[id].instance = seeds.seed("gap-sweep/instance", id);
    task_seeds[id].quadrature = seeds.seed("gap-sweep/quadrature", id);
    for (std::size_t k = 0; k < per_instance; ++k) task_seeds[id].chains.push_back(seeds.seed("gap-sweep/chain", id * per_instance + k));
  }

  using Block = std::vector<GapRow>;
  const auto blocks = parallel_map<Block>(n_instances, options.threads, [&](std::size_t id) {
    const int L = Ls[id / static_cast<std::size_t>(instances)];
    Block rows;
    std::optional<ClassicalSpinModel> model;
    std::string model_error;
    try {
      Rng rng(task_seeds[id].instance);
      model = ClassicalSpinModel::random_spin_glass(L, topology, rng);
    } catch (const std::exception& e) {
      model_error = e.what();
    }
    std::size_t k = 0;
    for (const ProposalKind kind : proposals) {
      std::optional<TransitionMatrix> t;
      std::string t_error = model_error;
      if (model) {
        try {
          if (kind == ProposalKind::kQuantum) {
            Rng rng(task_seeds[id].quadrature);
            t = build_proposal_matrix(*model, quantum, K, rng);
          } else if (kind == ProposalKind::kSingleFlip) {
            t = single_flip_proposal_matrix(L);
          } else {
            t = uniform_proposal_matrix(L);
          }
        } catch (const CapacityError& e) {
          t_error = e.what();
        }
      }
      for (const double beta : betas) {
        GapRow row{static_cast<std::int64_t>(id), L, beta, to_string(kind), kNaN, kNaN, kNaN, false, "ok"};
        const std::uint64_t chain_seed = task_seeds[id].chains[k++];
        if (!model) {
          row.status = "error: " + model_error;
          rows.push_back(row);
          continue;
        }
        if (t) {
          const SpectralGap gap = spectral_gap(assemble_kernel(*t, *model, beta).kernel);
          row.delta = gap.delta;
          row.reducible = gap.reducible;
        } else {
          row.status = "capacity: " + t_error;
        }
        try {
          Rng rng(chain_seed);
          const ChainResult chain = run_chain(*model, ProposalSpec{kind, quantum}, beta, steps, rng);
          row.tau = chain.diagnostics.tau_energy;
          row.acceptance_rate = chain.diagnostics.acceptance_rate;
        } catch (const CapacityError& e) {
          row.status = "capacity: " + std::string(e.what());
        }
        rows.push_back(row);
      }
    }
    // Row order within an instance: beta outer, proposal inner.
    Block ordered;
    for (std::size_t b = 0; b < betas.size(); ++b)
      for (std::size_t p = 0; p < proposals.size(); ++p) ordered.push_back(rows[p * betas.size() + b]);
    return ordered;
  });

  std::vector<GapRow> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

CsvTable fig2_table(const std::vector<Fig2Row>& rows) {
  CsvTable t({"estimator", "ansatz", "parameter", "M", "relative_error", "std", "mean_energy", "mean_stderr",
              "shots_per_setup", "total_shots"});
  for (const auto& r : rows) {
    t.add_row({r.estimator, r.ansatz, r.parameter, r.M, r.relative_error, r.std, r.mean_energy, r.mean_stderr,
               r.shots_per_setup, r.total_shots});
  }
  return t;
}

CsvTable gap_table(const std::vector<GapRow>& rows) {
  CsvTable t({"instance_id", "L", "beta", "proposal", "delta", "tau", "acceptance_rate", "reducible", "status"});
  for (const auto& r : rows) {
    t.add_row({r.instance_id, static_cast<std::int64_t>(r.L), r.beta, r.proposal, r.delta, r.tau, r.acceptance_rate,
               static_cast<std::int64_t>(r.reducible), r.status});
  }
  return t;
}

nlohmann::json instance_to_json(const ClassicalSpinModel& model, std::uint64_t seed) {
  json couplings = json::array();
  for (int i = 0; i < model.length(); ++i) {
    json row = json::array();
    for (int j = 0; j < model.length(); ++j) row.push_back(model.couplings()(i, j));
    couplings.push_back(row);
  }
  json fields = json::array();
  for (int i = 0; i < model.length(); ++i) fields.push_back(model.fields()[i]);
  return {{"L", model.length()},
          {"topology", to_string(model.topology())},
          {"couplings", couplings},
          {"fields", fields},
          {"seed", seed}};
}

ClassicalSpinModel instance_from_json(const nlohmann::json& doc) {
  try {
    const int L = doc.at("L").get<int>();
    if (L < 1) throw ParseError("instance: L must be positive");
    const auto& c = doc.at("couplings");
    if (!c.is_array() || static_cast<int>(c.size()) != L) throw ParseError("instance: couplings must be L x L");
    Eigen::MatrixXd couplings(L, L);
    for (int i = 0; i < L; ++i) {
      if (!c[i].is_array() || static_cast<int>(c[i].size()) != L) {
        throw ParseError("instance: couplings row " + std::to_string(i) + " must have L entries");
      }
      for (int j = 0; j < L; ++j) couplings(i, j) = c[i][j].get<double>();
    }
    const auto f = doc.value("fields", json::array());
    Eigen::VectorXd fields = Eigen::VectorXd::Zero(L);
    if (!f.empty()) {
      if (static_cast<int>(f.size()) != L) throw ParseError("instance: fields must have L entries");
      for (int i = 0; i < L; ++i) fields[i] = f[i].get<double>();
    }
    return ClassicalSpinModel(couplings, fields, parse_topology(doc.value("topology", std::string("fully-connected"))));
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

ExperimentOutput run_experiment(const std::string& experiment, const nlohmann::json& overrides,
                                const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentOutput out;
  out.experiment = experiment;
  out.config = resolve(default_config(experiment), overrides);
  out.master_seed = get<std::uint64_t>(out.config, "seed");
  SeedBook seeds(out.master_seed);
  if (experiment == "fig2") {
    run_fig2(out.config, options, seeds, out);
  } else if (experiment == "gap-sweep") {
    run_gap(out.config, options, seeds, out);
  } else if (experiment == "vqe-run") {
    run_vqe(out.config, options, seeds, out);
  } else if (experiment == "vmc-run") {
    run_vmc(out.config, options, seeds, out);
  } else if (experiment == "qemcmc-run") {
    run_qemcmc(out.config, options, seeds, out);
  } else {
    run_jw(out.config, options, seeds, out);
  }
  out.task_seeds = seeds.entries();
  out.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace zvlab::harness
