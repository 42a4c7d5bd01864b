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

#include "zvlab/vmc.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "zvlab/errors.h"
#include "zvlab/spectrum.h"

namespace zvlab {
namespace {

int wrap(int k, int L) { return ((k % L) + L) % L; }

void check_length(const Ansatz& a, const SpinConfiguration& x) {
  if (x.length() != a.length()) throw DimensionError("configuration length does not match the ansatz");
}

// Probability weights |psi|^2 over all configurations, normalised.
std::vector<double> enumerate_weights(const Ansatz& a) {
  const int L = a.length();
  if (L > kMaxDenseQubits + 8) throw CapacityError("enumeration limited to L <= 20");
  const std::uint64_t dim = std::uint64_t{1} << L;
  std::vector<double> logs(dim);
  double top = -std::numeric_limits<double>::infinity();
  for (std::uint64_t b = 0; b < dim; ++b) {
    logs[b] = 2.0 * a.log_psi(SpinConfiguration(L, b));
    top = std::max(top, logs[b]);
  }
  double z = 0.0;
  for (auto& w : logs) z += (w = std::exp(w - top));
  for (auto& w : logs) w /= z;
  return logs;
}

SRStatistics moments(const std::vector<Eigen::VectorXd>& o, const std::vector<double>& e,
                     const std::vector<double>& w) {
  const auto n = o.front().size();
  Eigen::VectorXd mo = Eigen::VectorXd::Zero(n), moe = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd moo = Eigen::MatrixXd::Zero(n, n);
  double me = 0.0;
  for (std::size_t i = 0; i < o.size(); ++i) {
    mo += w[i] * o[i];
    moe += w[i] * e[i] * o[i];
    moo += w[i] * o[i] * o[i].transpose();
    me += w[i] * e[i];
  }
  SRStatistics s;
  s.energy = me;
  s.force = -2.0 * (moe - mo * me);
  s.covariance = moo - mo * mo.transpose();
  return s;
}

}  // namespace

JastrowAnsatz::JastrowAnsatz(int L, std::vector<double> lambda) : L_(L), lambda_(std::move(lambda)) {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument("Jastrow ansatz needs an even chain length");
  if (static_cast<int>(lambda_.size()) != L / 2) {
    throw DimensionError("Jastrow ansatz needs L/2 = " + std::to_string(L / 2) + " parameters");
  }
}

double JastrowAnsatz::log_psi(const SpinConfiguration& x) const {
  check_length(*this, x);
  double out = 0.0;
  for (int r = 1; r <= n_params(); ++r) {
    int corr = 0;
    for (int k = 0; k < L_; ++k) corr += x.spin(k) * x.spin(wrap(k + r, L_));
    out += lambda_[static_cast<std::size_t>(r - 1)] * corr;
  }
  return out;
}

double JastrowAnsatz::log_flip_ratio(const SpinConfiguration& x, int k) const {
  double field = 0.0;
  for (int r = 1; r <= n_params(); ++r) {
    field += lambda_[static_cast<std::size_t>(r - 1)] * (x.spin(wrap(k + r, L_)) + x.spin(wrap(k - r, L_)));
  }
  return -2.0 * x.spin(k) * field;
}

cplx JastrowAnsatz::flip_ratio(const SpinConfiguration& x, int k) const {
  return {std::exp(log_flip_ratio(x, k)), 0.0};
}

Eigen::VectorXd log_derivatives(const JastrowAnsatz& a, const SpinConfiguration& x) {
  check_length(a, x);
  const int L = a.length();
  Eigen::VectorXd o(a.n_params());
  for (int r = 1; r <= a.n_params(); ++r) {
    int corr = 0;
    for (int k = 0; k < L; ++k) corr += x.spin(k) * x.spin(wrap(k + r, L));
    o[r - 1] = corr;
  }
  return o;
}

AmplitudeTableAnsatz::AmplitudeTableAnsatz(int L, Eigen::VectorXcd table) : L_(L), table_(std::move(table)) {
  if (L < 1 || L > 26) throw CapacityError("amplitude table limited to 1..26 sites");
  if (table_.size() != (Eigen::Index{1} << L)) throw DimensionError("amplitude table must have 2^L entries");
  if (table_.cwiseAbs().maxCoeff() == 0.0) throw std::invalid_argument("amplitude table is identically zero");
}

double AmplitudeTableAnsatz::log_psi(const SpinConfiguration& x) const {
  check_length(*this, x);
  return std::log(std::abs(table_[static_cast<Eigen::Index>(x.index())]));
}

cplx AmplitudeTableAnsatz::flip_ratio(const SpinConfiguration& x, int k) const {
  const cplx den = table_[static_cast<Eigen::Index>(x.index())];
  if (den == cplx(0.0, 0.0)) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  return table_[static_cast<Eigen::Index>(x.flipped(k).index())] / den;
}

double local_energy_tfim(const Ansatz& a, const SpinConfiguration& x, const TFIMModel& model) {
  check_length(a, x);
  if (model.L != a.length()) throw DimensionError("model length does not match the ansatz");
  if (!std::isfinite(a.log_psi(x))) return std::numeric_limits<double>::quiet_NaN();
  double off = 0.0;
  for (int k = 0; k < model.L; ++k) off += a.flip_ratio(x, k).real();
  return -model.J * model.bond_sum(x.index()) - model.Gamma * off;
}

std::vector<SpinConfiguration> metropolis_sample(const Ansatz& a, std::int64_t samples,
                                                 const ChainSettings& settings, Rng& rng) {
  if (samples < 1) throw std::invalid_argument("sample count must be at least 1");
  const int L = a.length();
  SpinConfiguration x;
  for (int tries = 0;; ++tries) {
    x = SpinConfiguration(L, rng.below(std::uint64_t{1} << L));
    if (std::isfinite(a.log_psi(x))) break;
    if (tries > 10000) throw NumericalError("could not find a configuration with nonzero amplitude");
  }
  auto attempt = [&] {
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(L)));
    const double p = std::norm(a.flip_ratio(x, k));
    if (rng.uniform() < p) x = x.flipped(k);
  };
  for (std::int64_t i = 0; i < settings.resolved_burn_in(L); ++i) attempt();
  const std::int64_t thin = settings.resolved_thinning(L);
  std::vector<SpinConfiguration> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t s = 0; s < samples; ++s) {
    for (std::int64_t i = 0; i < thin; ++i) attempt();
    out.push_back(x);
  }
  return out;
}

Eigen::MatrixXd metropolis_kernel(const Ansatz& a) {
  const int L = a.length();
  if (L > kMaxDenseQubits) throw CapacityError("dense kernel limited to 12 sites");
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const SpinConfiguration x(L, static_cast<std::uint64_t>(b));
    double stay = 1.0;
    for (int k = 0; k < L; ++k) {
      const double move = std::min(1.0, std::norm(a.flip_ratio(x, k))) / L;
      p(b, static_cast<Eigen::Index>(x.flipped(k).index())) += move;
      stay -= move;
    }
    p(b, b) += stay;
  }
  return p;
}

double batch_means_stderr(const std::vector<double>& series, int batches) {
  const auto n = static_cast<std::int64_t>(series.size());
  if (n < 2) return 0.0;
  const std::int64_t b = std::min<std::int64_t>(batches, n);
  const std::int64_t size = n / b;
  std::vector<double> means(static_cast<std::size_t>(b), 0.0);
  for (std::int64_t i = 0; i < b * size; ++i) means[static_cast<std::size_t>(i / size)] += series[static_cast<std::size_t>(i)];
  double mean = 0.0;
  for (auto& m : means) mean += (m /= static_cast<double>(size));
  mean /= static_cast<double>(b);
  double ss = 0.0;
  for (double m : means) ss += (m - mean) * (m - mean);
  return std::sqrt(ss / static_cast<double>(b - 1) / static_cast<double>(b));
}

EnergyEstimate estimate_energy_vmc(const Ansatz& a, const TFIMModel& model, std::int64_t samples, Rng& rng,
                                   const ChainSettings& settings) {
  const auto xs = metropolis_sample(a, samples, settings, rng);
  std::vector<double> e;
  e.reserve(xs.size());
  double mean = 0.0;
  for (const auto& x : xs) {
    e.push_back(local_energy_tfim(a, x, model));
    mean += e.back();
  }
  EnergyEstimate out;
  out.mean = mean / static_cast<double>(samples);
  out.stderr = batch_means_stderr(e);
  out.shots_used = samples;
  return out;
}

double enumerate_energy(const Ansatz& a, const TFIMModel& model) {
  const auto w = enumerate_weights(a);
  double e = 0.0;
  for (std::uint64_t b = 0; b < w.size(); ++b) {
    if (w[b] > 0.0) e += w[b] * local_energy_tfim(a, SpinConfiguration(a.length(), b), model);
  }
  return e;
}

SRStatistics sr_statistics(const JastrowAnsatz& a, const TFIMModel& model,
                           const std::vector<SpinConfiguration>& samples) {
  if (samples.empty()) throw std::invalid_argument("SR needs at least one sample");
  std::vector<Eigen::VectorXd> o;
  std::vector<double> e;
  for (const auto& x : samples) {
    o.push_back(log_derivatives(a, x));
    e.push_back(local_energy_tfim(a, x, model));
  }
  return moments(o, e, std::vector<double>(samples.size(), 1.0 / static_cast<double>(samples.size())));
}

SRStatistics enumerate_sr_statistics(const JastrowAnsatz& a, const TFIMModel& model) {
  const auto w = enumerate_weights(a);
  std::vector<Eigen::VectorXd> o;
  std::vector<double> e;
  for (std::uint64_t b = 0; b < w.size(); ++b) {
    const SpinConfiguration x(a.length(), b);
    o.push_back(log_derivatives(a, x));
    e.push_back(local_energy_tfim(a, x, model));
  }
  return moments(o, e, w);
}

JastrowAnsatz sr_update(const JastrowAnsatz& a, const SRStatistics& stats, double delta, double reg) {
  Eigen::MatrixXd s = stats.covariance;
  s.diagonal().array() += reg;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(s);
  if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() <= 0.0) {
    throw NumericalError("regularized SR matrix is singular");
  }
  const Eigen::VectorXd step = ldlt.solve(stats.force);
  std::vector<double> lambda = a.lambda();
  for (int r = 0; r < a.n_params(); ++r) lambda[static_cast<std::size_t>(r)] += delta * step[r];
  return JastrowAnsatz(a.length(), std::move(lambda));
}

JastrowAnsatz sr_step(const JastrowAnsatz& a, const TFIMModel& model,
                      const std::vector<SpinConfiguration>& samples, const SRSettings& settings) {
  const SRStatistics stats = sr_statistics(a, model, samples);
  const double reg = settings.relative_regularization * stats.covariance.diagonal().maxCoeff();
  return sr_update(a, stats, settings.delta, reg);
}

SRRun sr_optimize(JastrowAnsatz a, const TFIMModel& model, int steps, std::int64_t samples_per_step, Rng& rng,
                  const SRSettings& settings, const ChainSettings& chain) {
  SRRun run{a, {}};
  for (int s = 0; s < steps; ++s) {
    run.ansatz = sr_step(run.ansatz, model, metropolis_sample(run.ansatz, samples_per_step, chain, rng), settings);
    run.energies.push_back(enumerate_energy(run.ansatz, model));
  }
  return run;
}

GaussianToy::GaussianToy(double theta_, double omega_) : theta(theta_), omega(omega_) {
  if (!(theta > 0.0)) throw std::invalid_argument("Gaussian width parameter must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("oscillator frequency must be positive");
}

double local_energy(const GaussianToy& g, double x, const std::function<double(double)>& potential) {
  return g.theta - 2.0 * g.theta * g.theta * x * x + potential(x);
}

double harmonic_local_energy(const GaussianToy& g, double x) {
  return g.theta + x * x * (0.5 * g.omega * g.omega - 2.0 * g.theta * g.theta);
}

}  // namespace zvlab
