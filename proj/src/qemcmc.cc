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

#include "zvlab/qemcmc.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

constexpr int kMaxTableSites = 20;
constexpr int kMaxMatrixSites = 10;

void check_config(const ClassicalSpinModel& model, const SpinConfiguration& x) {
  if (x.length() != model.length()) throw DimensionError("configuration length does not match the model");
}

// First-order product formula for exp(-i (V - Gamma sum X) t).
void trotter_evolve(Eigen::VectorXcd& v, const std::vector<double>& energies, int L, double gamma, double t,
                    int steps) {
  const double dt = t / steps;
  const double c = std::cos(gamma * dt);
  const cplx is(0.0, std::sin(gamma * dt));
  for (int s = 0; s < steps; ++s) {
    for (Eigen::Index b = 0; b < v.size(); ++b) v[b] *= std::polar(1.0, -energies[static_cast<std::size_t>(b)] * dt);
    for (int k = 0; k < L; ++k) {
      const Eigen::Index stride = Eigen::Index{1} << k;
      for (Eigen::Index base = 0; base < v.size(); base += 2 * stride) {
        for (Eigen::Index i = base; i < base + stride; ++i) {
          const cplx a0 = v[i], a1 = v[i + stride];
          v[i] = c * a0 + is * a1;
          v[i + stride] = is * a0 + c * a1;
        }
      }
    }
  }
}

std::uint64_t sample_index(const Eigen::VectorXcd& v, Rng& rng) {
  double total = 0.0;
  for (const auto& a : v) total += std::norm(a);
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    acc += std::norm(v[b]);
    if (u < acc) return static_cast<std::uint64_t>(b);
  }
  // Round-off at the top of the CDF: last state with nonzero weight.
  for (Eigen::Index b = v.size() - 1; b > 0; --b) {
    if (std::norm(v[b]) > 0.0) return static_cast<std::uint64_t>(b);
  }
  return 0;
}

void draw_gamma_t(const QuantumProposalConfig& cfg, double scale, Rng& rng, double& gamma, double& t) {
  gamma = scale * rng.uniform(cfg.gamma_min, cfg.gamma_max);
  t = rng.uniform(cfg.t_min, cfg.t_max);
}

}  // namespace

Topology parse_topology(const std::string& name) {
  if (name == "chain") return Topology::kChain;
  if (name == "2d-lattice") return Topology::kLattice2D;
  if (name == "fully-connected") return Topology::kFullyConnected;
  throw ParseError("unknown topology '" + name + "'");
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::kChain: return "chain";
    case Topology::kLattice2D: return "2d-lattice";
    case Topology::kFullyConnected: return "fully-connected";
  }
  return "?";
}

ClassicalSpinModel::ClassicalSpinModel(Eigen::MatrixXd couplings, Eigen::VectorXd fields, Topology topology)
    : couplings_(std::move(couplings)), fields_(std::move(fields)), topology_(topology) {
  const auto L = fields_.size();
  if (L < 1) throw std::invalid_argument("spin model needs at least one site");
  if (couplings_.rows() != L || couplings_.cols() != L) throw DimensionError("coupling matrix must be L x L");
  if ((couplings_ - couplings_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("coupling matrix must be symmetric");
  }
  if (couplings_.diagonal().cwiseAbs().maxCoeff() != 0.0) {
    throw std::invalid_argument("coupling matrix must have a zero diagonal");
  }
}

ClassicalSpinModel ClassicalSpinModel::ferromagnetic_chain(int L, double J) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(L, L);
  for (int k = 0; k < L && L > 2; ++k) c(k, (k + 1) % L) = c((k + 1) % L, k) = J;
  // At L = 2 both ring bonds join the same pair.
  if (L == 2) c(1, 0) = c(0, 1) = 2.0 * J;
  return {c, Eigen::VectorXd::Zero(L), Topology::kChain};
}

ClassicalSpinModel ClassicalSpinModel::random_spin_glass(int L, Topology topology, Rng& rng) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(L, L);
  auto bond = [&](int i, int j) {
    if (i == j || c(i, j) != 0.0) return;
    c(i, j) = c(j, i) = rng.normal();
  };
  switch (topology) {
    case Topology::kChain:
      for (int k = 0; k < L; ++k) bond(k, (k + 1) % L);
      break;
    case Topology::kLattice2D: {
      const int side = static_cast<int>(std::lround(std::sqrt(L)));
      if (side * side != L) throw std::invalid_argument("2d lattice needs a square number of sites");
      const bool wrap = side >= 3;
      for (int r = 0; r < side; ++r) {
        for (int q = 0; q < side; ++q) {
          const int i = r * side + q;
          if (q + 1 < side || wrap) bond(i, r * side + (q + 1) % side);
          if (r + 1 < side || wrap) bond(i, ((r + 1) % side) * side + q);
        }
      }
      break;
    }
    case Topology::kFullyConnected:
      for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) bond(i, j);
      break;
  }
  return {c, Eigen::VectorXd::Zero(L), topology};
}

double ClassicalSpinModel::energy(const SpinConfiguration& x) const {
  check_config(*this, x);
  double e = 0.0;
  for (int i = 0; i < length(); ++i) {
    const int si = x.spin(i);
    e -= fields_[i] * si;
    for (int j = i + 1; j < length(); ++j) e -= couplings_(i, j) * si * x.spin(j);
  }
  return e;
}

std::vector<double> ClassicalSpinModel::energy_table() const {
  if (length() > kMaxTableSites) throw CapacityError("energy table limited to L <= 20");
  const std::uint64_t dim = std::uint64_t{1} << length();
  std::vector<double> out(dim);
  for (std::uint64_t b = 0; b < dim; ++b) out[b] = energy(SpinConfiguration(length(), b));
  return out;
}

double ClassicalSpinModel::mean_abs_coupling() const {
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < length(); ++i) {
    for (int j = i + 1; j < length(); ++j) {
      if (couplings_(i, j) != 0.0) {
        sum += std::abs(couplings_(i, j));
        ++count;
      }
    }
  }
  return count ? sum / count : 1.0;
}

void QuantumProposalConfig::validate() const {
  if (!(gamma_min > 0.0) || gamma_max < gamma_min) throw std::invalid_argument("need 0 < gamma_min <= gamma_max");
  if (!(t_min > 0.0) || t_max < t_min) throw std::invalid_argument("need 0 < t_min <= t_max");
  if (mixing < 0.0 || mixing > 1.0) throw std::invalid_argument("mixing probability must lie in [0, 1]");
  if (evolution.kind == Evolution::Kind::kTrotter && evolution.steps < 1) {
    throw std::invalid_argument("Trotter evolution needs at least one step");
  }
}

IsingOperator proposal_hamiltonian(const std::vector<double>& energies, int L, double gamma) {
  return IsingOperator{L, energies, gamma};
}

SpinConfiguration propose_quantum_fixed(const std::vector<double>& energies, int L, const SpinConfiguration& x,
                                        double gamma, double t, Evolution evolution, Rng& rng) {
  if (evolution.kind == Evolution::Kind::kExact && L > kMaxDenseQubits) {
    throw CapacityError("exact quantum proposals limited to L <= 12; use Trotter evolution");
  }
  if (L > kMaxTableSites) throw CapacityError("quantum proposals limited to L <= 20");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << L);
  v[static_cast<Eigen::Index>(x.index())] = 1.0;
  if (evolution.kind == Evolution::Kind::kExact) {
    v = chebyshev_propagate(proposal_hamiltonian(energies, L, gamma), v, t);
  } else {
    trotter_evolve(v, energies, L, gamma, t, evolution.steps);
  }
  return {L, sample_index(v, rng)};
}

SpinConfiguration propose_quantum(const ClassicalSpinModel& model, const SpinConfiguration& x,
                                  const QuantumProposalConfig& cfg, Rng& rng) {
  check_config(model, x);
  cfg.validate();
  double gamma = 0.0, t = 0.0;
  draw_gamma_t(cfg, model.mean_abs_coupling(), rng, gamma, t);
  return propose_quantum_fixed(model.energy_table(), model.length(), x, gamma, t, cfg.evolution, rng);
}

SpinConfiguration propose_single_flip(const SpinConfiguration& x, Rng& rng) {
  return x.flipped(static_cast<int>(rng.below(static_cast<std::uint64_t>(x.length()))));
}

SpinConfiguration propose_uniform(int L, Rng& rng) { return {L, rng.below(std::uint64_t{1} << L)}; }

bool accept_delta(double delta_v, double beta, Rng& rng) {
  if (beta == 0.0 || delta_v <= 0.0) return true;
  return rng.uniform() < std::exp(-beta * delta_v);
}

bool accept(const ClassicalSpinModel& model, const SpinConfiguration& x, const SpinConfiguration& x_prime,
            double beta, Rng& rng) {
  return accept_delta(model.energy(x_prime) - model.energy(x), beta, rng);
}

ProposalKind parse_proposal(const std::string& name) {
  if (name == "quantum") return ProposalKind::kQuantum;
  if (name == "single-flip") return ProposalKind::kSingleFlip;
  if (name == "uniform") return ProposalKind::kUniform;
  throw ParseError("unknown proposal '" + name + "'");
}

std::string to_string(ProposalKind p) {
  switch (p) {
    case ProposalKind::kQuantum: return "quantum";
    case ProposalKind::kSingleFlip: return "single-flip";
    case ProposalKind::kUniform: return "uniform";
  }
  return "?";
}

ChainResult run_chain(const ClassicalSpinModel& model, const ProposalSpec& proposal, double beta,
                      std::int64_t steps, Rng& rng) {
  if (steps < 1) throw std::invalid_argument("chain needs at least one step");
  if (proposal.kind == ProposalKind::kQuantum) proposal.quantum.validate();
  const int L = model.length();
  const std::vector<double> energies = model.energy_table();
  const double scale = model.mean_abs_coupling();

  ChainResult out;
  out.samples.reserve(static_cast<std::size_t>(steps));
  std::vector<double> e_series, m_series;
  e_series.reserve(static_cast<std::size_t>(steps));
  m_series.reserve(static_cast<std::size_t>(steps));

  SpinConfiguration x = propose_uniform(L, rng);
  std::int64_t accepted = 0;
  for (std::int64_t s = 0; s < steps; ++s) {
    SpinConfiguration y;
    switch (proposal.kind) {
      case ProposalKind::kSingleFlip: y = propose_single_flip(x, rng); break;
      case ProposalKind::kUniform: y = propose_uniform(L, rng); break;
      case ProposalKind::kQuantum: {
        const auto& cfg = proposal.quantum;
        if (cfg.mixing > 0.0 && rng.uniform() < cfg.mixing) {
          y = propose_single_flip(x, rng);
        } else {
          double gamma = 0.0, t = 0.0;
          draw_gamma_t(cfg, scale, rng, gamma, t);
          y = propose_quantum_fixed(energies, L, x, gamma, t, cfg.evolution, rng);
        }
        break;
      }
    }
    if (accept_delta(energies[y.index()] - energies[x.index()], beta, rng)) {
      x = y;
      ++accepted;
    }
    out.samples.push_back(x);
    e_series.push_back(energies[x.index()]);
    m_series.push_back(x.magnetization());
  }
  out.diagnostics.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(steps);
  out.diagnostics.tau_energy = autocorrelation_time(e_series);
  out.diagnostics.tau_magnetization = autocorrelation_time(m_series);
  return out;
}

TransitionMatrix build_proposal_matrix(const ClassicalSpinModel& model, const QuantumProposalConfig& cfg, int K,
                                       Rng& rng) {
  cfg.validate();
  const int L = model.length();
  if (L > kMaxMatrixSites) throw CapacityError("proposal matrices limited to L <= 10");
  if (K < 1) throw std::invalid_argument("quadrature needs at least one draw");
  const std::vector<double> energies = model.energy_table();
  const double scale = model.mean_abs_coupling();
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXd t_sum = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k < K; ++k) {
    double gamma = 0.0, t = 0.0;
    draw_gamma_t(cfg, scale, rng, gamma, t);
    Eigen::MatrixXcd u;
    if (cfg.evolution.kind == Evolution::Kind::kExact) {
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(proposal_hamiltonian(energies, L, gamma).dense());
      const Eigen::MatrixXcd q = es.eigenvectors().cast<cplx>();
      Eigen::VectorXcd phase(dim);
      for (Eigen::Index i = 0; i < dim; ++i) phase[i] = std::polar(1.0, -es.eigenvalues()[i] * t);
      u = q * phase.asDiagonal() * q.transpose();
    } else {
      u = Eigen::MatrixXcd::Identity(dim, dim);
      for (Eigen::Index c = 0; c < dim; ++c) {
        Eigen::VectorXcd col = u.col(c);
        trotter_evolve(col, energies, L, gamma, t, cfg.evolution.steps);
        u.col(c) = col;
      }
    }
    t_sum += u.cwiseAbs2();
  }
  TransitionMatrix out;
  out.proposal = t_sum / K;
  if (cfg.mixing > 0.0) {
    out.proposal = (1.0 - cfg.mixing) * out.proposal + cfg.mixing * single_flip_proposal_matrix(L).proposal;
  }
  return out;
}

TransitionMatrix single_flip_proposal_matrix(int L) {
  if (L > kMaxMatrixSites + 2) throw CapacityError("proposal matrices limited to L <= 12");
  const Eigen::Index dim = Eigen::Index{1} << L;
  TransitionMatrix out{Eigen::MatrixXd::Zero(dim, dim), {}};
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (int k = 0; k < L; ++k) out.proposal(b, b ^ (Eigen::Index{1} << k)) += 1.0 / L;
  }
  return out;
}

TransitionMatrix uniform_proposal_matrix(int L) {
  if (L > kMaxMatrixSites + 2) throw CapacityError("proposal matrices limited to L <= 12");
  const Eigen::Index dim = Eigen::Index{1} << L;
  return {Eigen::MatrixXd::Constant(dim, dim, 1.0 / static_cast<double>(dim)), {}};
}

TransitionMatrix assemble_kernel(const TransitionMatrix& t, const ClassicalSpinModel& model, double beta) {
  const std::vector<double> v = model.energy_table();
  const auto dim = static_cast<Eigen::Index>(v.size());
  if (t.proposal.rows() != dim || t.proposal.cols() != dim) throw DimensionError("proposal matrix size mismatch");
  TransitionMatrix out{t.proposal, Eigen::MatrixXd::Zero(dim, dim)};
  for (Eigen::Index i = 0; i < dim; ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (i == j) continue;
      const double dv = v[static_cast<std::size_t>(j)] - v[static_cast<std::size_t>(i)];
      const double a = (beta == 0.0 || dv <= 0.0) ? 1.0 : std::exp(-beta * dv);
      off += (out.kernel(i, j) = t.proposal(i, j) * a);
    }
    out.kernel(i, i) = 1.0 - off;
  }
  return out;
}

Eigen::VectorXd boltzmann_distribution(const ClassicalSpinModel& model, double beta) {
  const std::vector<double> v = model.energy_table();
  const double vmin = *std::min_element(v.begin(), v.end());
  Eigen::VectorXd rho(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < rho.size(); ++i) rho[i] = std::exp(-beta * (v[static_cast<std::size_t>(i)] - vmin));
  return rho / rho.sum();
}

SpectralGap spectral_gap(const Eigen::MatrixXd& p) {
  if (p.rows() != p.cols()) throw DimensionError("transition matrix must be square");
  if (p.rows() == 1) return {1.0, false};
  const Eigen::EigenSolver<Eigen::MatrixXd> es(p, false);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalue solver failed");
  std::vector<double> mod(static_cast<std::size_t>(p.rows()));
  for (Eigen::Index i = 0; i < p.rows(); ++i) mod[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()[i]);
  std::sort(mod.begin(), mod.end(), std::greater<>());
  SpectralGap g;
  g.delta = std::clamp(1.0 - mod[1], 0.0, 1.0);
  g.reducible = g.delta <= 1e-14;
  return g;
}

double autocorrelation_time(const std::vector<double>& series) {
  const auto n = series.size();
  if (n < 2) return std::numeric_limits<double>::infinity();
  double mean = 0.0;
  for (double x : series) mean += x;
  mean /= static_cast<double>(n);
  std::size_t padded = 1;
  while (padded < 2 * n) padded <<= 1;
  std::vector<cplx> in(padded, cplx(0.0, 0.0)), spec, back;
  for (std::size_t i = 0; i < n; ++i) in[i] = series[i] - mean;
  Eigen::FFT<double> fft;
  fft.fwd(spec, in);
  for (auto& c : spec) c = std::norm(c);
  fft.inv(back, spec);
  const double c0 = back[0].real();
  double scale = 0.0;
  for (double x : series) scale = std::max(scale, std::abs(x));
  if (!(c0 > 1e-24 * static_cast<double>(n) * std::max(scale * scale, 1e-300))) {
    return std::numeric_limits<double>::infinity();
  }
  double tau = 0.5;
  for (std::size_t w = 1; w < n; ++w) {
    tau += back[w].real() / c0;
    if (static_cast<double>(w) >= 5.0 * tau) return tau;
  }
  return tau;
}

double replica_autocorrelation_time(const std::vector<std::vector<double>>& replicas) {
  if (replicas.size() < 2) throw std::invalid_argument("need at least two replicas");
  const std::size_t n = replicas.front().size();
  if (n < 1) throw std::invalid_argument("replicas must be non-empty");
  std::vector<double> means;
  double grand = 0.0;
  for (const auto& r : replicas) {
    if (r.size() != n) throw DimensionError("replicas must have equal length");
    double m = 0.0;
    for (double x : r) m += x;
    means.push_back(m / static_cast<double>(n));
    grand += means.back();
  }
  grand /= static_cast<double>(replicas.size());
  double pooled = 0.0, between = 0.0;
  for (std::size_t i = 0; i < replicas.size(); ++i) {
    for (double x : replicas[i]) pooled += (x - grand) * (x - grand);
    between += (means[i] - grand) * (means[i] - grand);
  }
  pooled /= static_cast<double>(n * replicas.size() - 1);
  between /= static_cast<double>(replicas.size() - 1);
  if (!(pooled > 0.0)) return std::numeric_limits<double>::infinity();
  return static_cast<double>(n) * between / (2.0 * pooled);
}

}  // namespace zvlab
