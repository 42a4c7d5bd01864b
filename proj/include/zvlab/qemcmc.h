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

#ifndef ZVLAB_QEMCMC_H
#define ZVLAB_QEMCMC_H

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zvlab/rng.h"
#include "zvlab/spectrum.h"
#include "zvlab/spin.h"

namespace zvlab {

enum class Topology { kChain, kLattice2D, kFullyConnected };

Topology parse_topology(const std::string& name);
std::string to_string(Topology t);

/// V(x) = -sum_{i<j} J_ij s_i s_j - sum_i h_i s_i.
class ClassicalSpinModel {
 public:
  ClassicalSpinModel(Eigen::MatrixXd couplings, Eigen::VectorXd fields, Topology topology);

  /// Uniform ferromagnetic ring.
  static ClassicalSpinModel ferromagnetic_chain(int L, double J = 1.0);
  /// J_ij ~ N(0, 1) on the edges of `topology`; h = 0. kLattice2D needs a
  /// square L (periodic side >= 3, open otherwise).
  static ClassicalSpinModel random_spin_glass(int L, Topology topology, Rng& rng);

  int length() const { return static_cast<int>(fields_.size()); }
  const Eigen::MatrixXd& couplings() const { return couplings_; }
  const Eigen::VectorXd& fields() const { return fields_; }
  Topology topology() const { return topology_; }

  double energy(const SpinConfiguration& x) const;
  /// V over all 2^L configurations, indexed by basis index (L <= 20).
  std::vector<double> energy_table() const;
  /// Mean |J_ij| over nonzero couplings; 1 if there are none.
  double mean_abs_coupling() const;

 private:
  Eigen::MatrixXd couplings_;
  Eigen::VectorXd fields_;
  Topology topology_;
};

/// Randomised quantum move: evolve |x> under V - Gamma sum X for time t and
/// measure. Gamma is drawn in units of mean|J|.
struct QuantumProposalConfig {
  double gamma_min = 0.1;
  double gamma_max = 0.6;
  double t_min = 2.0;
  double t_max = 20.0;
  Evolution evolution = Evolution::exact();
  double mixing = 0.0;  // probability of a single-flip move instead

  void validate() const;
};

/// Transverse-field operator for one (Gamma, t) draw.
IsingOperator proposal_hamiltonian(const std::vector<double>& energies, int L, double gamma);

SpinConfiguration propose_quantum(const ClassicalSpinModel& model, const SpinConfiguration& x,
                                  const QuantumProposalConfig& cfg, Rng& rng);
/// Same with a precomputed energy table and a fixed (Gamma, t).
SpinConfiguration propose_quantum_fixed(const std::vector<double>& energies, int L, const SpinConfiguration& x,
                                        double gamma, double t, Evolution evolution, Rng& rng);

SpinConfiguration propose_single_flip(const SpinConfiguration& x, Rng& rng);
SpinConfiguration propose_uniform(int L, Rng& rng);

/// Metropolis test min[1, exp(-beta (V(x') - V(x)))].
bool accept(const ClassicalSpinModel& model, const SpinConfiguration& x, const SpinConfiguration& x_prime,
            double beta, Rng& rng);
bool accept_delta(double delta_v, double beta, Rng& rng);

enum class ProposalKind { kQuantum, kSingleFlip, kUniform };

ProposalKind parse_proposal(const std::string& name);
std::string to_string(ProposalKind p);

struct ProposalSpec {
  ProposalKind kind = ProposalKind::kSingleFlip;
  QuantumProposalConfig quantum;
};

struct ChainDiagnostics {
  double acceptance_rate = 0.0;
  double tau_energy = 0.0;
  double tau_magnetization = 0.0;
};

struct ChainResult {
  std::vector<SpinConfiguration> samples;  // state after every step
  ChainDiagnostics diagnostics;
};

/// Metropolis chain from a uniformly random start.
ChainResult run_chain(const ClassicalSpinModel& model, const ProposalSpec& proposal, double beta,
                      std::int64_t steps, Rng& rng);

struct TransitionMatrix {
  Eigen::MatrixXd proposal;  // T
  Eigen::MatrixXd kernel;    // P; empty until assembled
};

/// T(x, x') = (1/K) sum_k |<x'| exp(-i H(Gamma_k) t_k) |x>|^2 (L <= 10).
TransitionMatrix build_proposal_matrix(const ClassicalSpinModel& model, const QuantumProposalConfig& cfg, int K,
                                       Rng& rng);
TransitionMatrix single_flip_proposal_matrix(int L);
TransitionMatrix uniform_proposal_matrix(int L);

/// P(x, x') = T(x, x') min[1, exp(-beta dV)] off the diagonal; rejected mass
/// stays on the diagonal.
TransitionMatrix assemble_kernel(const TransitionMatrix& t, const ClassicalSpinModel& model, double beta);

/// Normalised Boltzmann weights over all configurations.
Eigen::VectorXd boltzmann_distribution(const ClassicalSpinModel& model, double beta);

struct SpectralGap {
  double delta = 0.0;
  bool reducible = false;  // delta <= 1e-14
};

/// 1 - |lambda_2| from the general eigenvalues of P.
SpectralGap spectral_gap(const Eigen::MatrixXd& p);

/// Integrated autocorrelation time 1/2 + sum_{t=1}^{W} rho(t), with W the
/// smallest window satisfying W >= 5 tau(W). Infinite for a constant series.
double autocorrelation_time(const std::vector<double>& series);

/// tau from independent equal-length replicas: n Var(replica means) / (2
/// pooled variance). Stays meaningful when single runs never leave a basin.
double replica_autocorrelation_time(const std::vector<std::vector<double>>& replicas);

}  // namespace zvlab

#endif  // ZVLAB_QEMCMC_H
