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

#ifndef ZVLAB_VMC_H
#define ZVLAB_VMC_H

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "zvlab/pauli.h"
#include "zvlab/pauli_estimator.h"
#include "zvlab/rng.h"
#include "zvlab/spin.h"
#include "zvlab/tfim.h"

namespace zvlab {

/// Trial wave function over spin configurations.
class Ansatz {
 public:
  virtual ~Ansatz() = default;
  virtual int length() const = 0;
  /// log|psi(x)|; -infinity where psi vanishes.
  virtual double log_psi(const SpinConfiguration& x) const = 0;
  /// psi(x with spin k flipped) / psi(x).
  virtual cplx flip_ratio(const SpinConfiguration& x, int k) const = 0;
};

/// psi(x) = exp(sum_{r=1}^{L/2} lambda_r sum_k s_k s_{k+r}), periodic.
/// At r = L/2 each pair appears twice in the sum over k; kept as written.
class JastrowAnsatz final : public Ansatz {
 public:
  JastrowAnsatz(int L, std::vector<double> lambda);
  static JastrowAnsatz zero(int L) { return JastrowAnsatz(L, std::vector<double>(static_cast<std::size_t>(L / 2), 0.0)); }

  int length() const override { return L_; }
  const std::vector<double>& lambda() const { return lambda_; }
  int n_params() const { return static_cast<int>(lambda_.size()); }

  double log_psi(const SpinConfiguration& x) const override;
  cplx flip_ratio(const SpinConfiguration& x, int k) const override;
  /// Real log-ratio for a flip of spin k.
  double log_flip_ratio(const SpinConfiguration& x, int k) const;

 private:
  int L_;
  std::vector<double> lambda_;
};

/// O_r(x) = d log psi / d lambda_r = sum_k s_k s_{k+r}.
Eigen::VectorXd log_derivatives(const JastrowAnsatz& a, const SpinConfiguration& x);

/// Explicit amplitude table, e.g. an exact eigenvector.
class AmplitudeTableAnsatz final : public Ansatz {
 public:
  AmplitudeTableAnsatz(int L, Eigen::VectorXcd table);

  int length() const override { return L_; }
  const Eigen::VectorXcd& table() const { return table_; }
  double log_psi(const SpinConfiguration& x) const override;
  cplx flip_ratio(const SpinConfiguration& x, int k) const override;

 private:
  int L_;
  Eigen::VectorXcd table_;
};

/// E_L(x) = -J sum s_k s_{k+1} - Gamma sum_k psi(x^(k))/psi(x). Real part for
/// complex ansatze. NaN when psi(x) = 0.
double local_energy_tfim(const Ansatz& a, const SpinConfiguration& x, const TFIMModel& model);

struct ChainSettings {
  std::int64_t burn_in = -1;   // single-flip attempts; -1: 10 L sweeps
  std::int64_t thinning = -1;  // attempts between records; -1: L
  std::int64_t resolved_burn_in(int L) const { return burn_in >= 0 ? burn_in : 10LL * L * L; }
  std::int64_t resolved_thinning(int L) const { return thinning > 0 ? thinning : L; }
};

/// Single-spin-flip Metropolis chain targeting |psi|^2.
std::vector<SpinConfiguration> metropolis_sample(const Ansatz& a, std::int64_t samples,
                                                 const ChainSettings& settings, Rng& rng);

/// Exact single-flip Metropolis kernel (2^L x 2^L), for L <= 12.
Eigen::MatrixXd metropolis_kernel(const Ansatz& a);

inline constexpr int kVmcBatches = 16;

/// Mean local energy; stderr from batch means over 16 batches.
EnergyEstimate estimate_energy_vmc(const Ansatz& a, const TFIMModel& model, std::int64_t samples,
                                   Rng& rng, const ChainSettings& settings = {});

/// Batch-means standard error of a series.
double batch_means_stderr(const std::vector<double>& series, int batches = kVmcBatches);

/// <H> by full enumeration over all 2^L configurations.
double enumerate_energy(const Ansatz& a, const TFIMModel& model);

/// Forces and covariance of the log-derivatives.
struct SRStatistics {
  Eigen::VectorXd force;       // f_r = -2 (<O_r E_L> - <O_r><E_L>)
  Eigen::MatrixXd covariance;  // S_rs = <O_r O_s> - <O_r><O_s>
  double energy = 0.0;
};

SRStatistics sr_statistics(const JastrowAnsatz& a, const TFIMModel& model,
                           const std::vector<SpinConfiguration>& samples);
SRStatistics enumerate_sr_statistics(const JastrowAnsatz& a, const TFIMModel& model);

/// lambda' = lambda + delta (S + reg I)^{-1} f.
JastrowAnsatz sr_update(const JastrowAnsatz& a, const SRStatistics& stats, double delta, double reg);

struct SRSettings {
  double delta = 0.05;
  double relative_regularization = 1e-3;  // reg = this * max diag S
};

/// One SR step from a sample set; f and S come from the same samples.
JastrowAnsatz sr_step(const JastrowAnsatz& a, const TFIMModel& model,
                      const std::vector<SpinConfiguration>& samples, const SRSettings& settings = {});

struct SRRun {
  JastrowAnsatz ansatz;
  std::vector<double> energies;  // exact energy after each step
};

SRRun sr_optimize(JastrowAnsatz a, const TFIMModel& model, int steps, std::int64_t samples_per_step,
                  Rng& rng, const SRSettings& settings = {}, const ChainSettings& chain = {});

/// psi(x) = exp(-theta x^2) for H = -1/2 d^2/dx^2 + V(x).
struct GaussianToy {
  double theta;
  double omega;
  GaussianToy(double theta_, double omega_);
};

/// theta - 2 theta^2 x^2 + V(x).
double local_energy(const GaussianToy& g, double x, const std::function<double(double)>& potential);

/// Harmonic well V = omega^2 x^2 / 2: theta + x^2 (omega^2/2 - 2 theta^2).
double harmonic_local_energy(const GaussianToy& g, double x);

}  // namespace zvlab

#endif  // ZVLAB_VMC_H
