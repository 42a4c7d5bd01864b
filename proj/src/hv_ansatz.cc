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

#include "zvlab/hv_ansatz.h"

#include <cmath>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

// Gates act in place on raw vectors; the public API stays value-based.
class Circuit {
 public:
  explicit Circuit(const TFIMModel& model) : model_(model), h1_(model.h1_diagonal()) {}

  // exp(i theta G_j) with G_0 = H_1 (diagonal) and G_1 = H_2 = -Gamma sum X.
  void apply_gate(Eigen::VectorXcd& v, int generator, double theta) const {
    if (generator == 0) {
      for (Eigen::Index b = 0; b < v.size(); ++b) v[b] *= std::polar(1.0, theta * h1_[static_cast<std::size_t>(b)]);
      return;
    }
    const double a = theta * model_.Gamma;
    const double c = std::cos(a);
    const cplx ms(0.0, -std::sin(a));
    for (int k = 0; k < model_.L; ++k) {
      const Eigen::Index stride = Eigen::Index{1} << k;
      for (Eigen::Index base = 0; base < v.size(); base += 2 * stride) {
        for (Eigen::Index i = base; i < base + stride; ++i) {
          const cplx a0 = v[i], a1 = v[i + stride];
          v[i] = c * a0 + ms * a1;
          v[i + stride] = ms * a0 + c * a1;
        }
      }
    }
  }

  // i G_j v
  Eigen::VectorXcd apply_i_generator(const Eigen::VectorXcd& v, int generator) const {
    Eigen::VectorXcd out(v.size());
    if (generator == 0) {
      for (Eigen::Index b = 0; b < v.size(); ++b) out[b] = cplx(0.0, h1_[static_cast<std::size_t>(b)]) * v[b];
      return out;
    }
    out.setZero();
    for (int k = 0; k < model_.L; ++k) {
      const Eigen::Index bit = Eigen::Index{1} << k;
      for (Eigen::Index b = 0; b < v.size(); ++b) out[b] += v[b ^ bit];
    }
    return cplx(0.0, -model_.Gamma) * out;
  }

 private:
  TFIMModel model_;
  std::vector<double> h1_;
};

int generator_of(int j) { return j % HVAnsatz::kGeneratorsPerBlock; }

}  // namespace

HVAnsatz::HVAnsatz(TFIMModel m, int d)
    : HVAnsatz(m, d, std::vector<double>(static_cast<std::size_t>(kGeneratorsPerBlock * d), 0.0)) {}

HVAnsatz::HVAnsatz(TFIMModel m, int d, std::vector<double> theta)
    : model(m), depth(d), params(std::move(theta)) {
  if (d < 1) throw std::invalid_argument("HV depth must be positive");
  if (static_cast<int>(params.size()) != n_params()) {
    throw DimensionError("HV ansatz needs " + std::to_string(n_params()) + " parameters, got " +
                         std::to_string(params.size()));
  }
}

StateVector prepare(const HVAnsatz& a) {
  const Circuit circuit(a.model);
  Eigen::VectorXcd v = init_plus(a.model.L).amplitudes();
  for (int j = 0; j < a.n_params(); ++j) circuit.apply_gate(v, generator_of(j), a.params[static_cast<std::size_t>(j)]);
  return StateVector(a.model.L, std::move(v));
}

IsingOperator hamiltonian_operator(const TFIMModel& model) {
  return IsingOperator{model.L, model.h1_diagonal(), model.Gamma};
}

EnergyGradient energy_and_gradient(const HVAnsatz& a) {
  const Circuit circuit(a.model);
  const IsingOperator h = hamiltonian_operator(a.model);
  Eigen::VectorXcd phi = prepare(a).amplitudes();
  Eigen::VectorXcd lambda = h.apply(phi);
  EnergyGradient out{phi.dot(lambda).real(), Eigen::VectorXd::Zero(a.n_params())};
  // Walk the circuit backwards; phi is the state right after gate j and
  // lambda = (gates after j)^dagger H psi.
  for (int j = a.n_params() - 1; j >= 0; --j) {
    const int g = generator_of(j);
    out.gradient[j] = 2.0 * lambda.dot(circuit.apply_i_generator(phi, g)).real();
    const double theta = a.params[static_cast<std::size_t>(j)];
    circuit.apply_gate(phi, g, -theta);
    circuit.apply_gate(lambda, g, -theta);
  }
  return out;
}

double exact_energy(const HVAnsatz& a) {
  const Eigen::VectorXcd psi = prepare(a).amplitudes();
  return psi.dot(hamiltonian_operator(a.model).apply(psi)).real();
}

std::vector<Eigen::VectorXcd> derivative_states(const HVAnsatz& a) {
  const Circuit circuit(a.model);
  const int n = a.n_params();
  std::vector<Eigen::VectorXcd> out;
  out.reserve(static_cast<std::size_t>(n));
  Eigen::VectorXcd phi = init_plus(a.model.L).amplitudes();
  for (int j = 0; j < n; ++j) {
    circuit.apply_gate(phi, generator_of(j), a.params[static_cast<std::size_t>(j)]);
    Eigen::VectorXcd d = circuit.apply_i_generator(phi, generator_of(j));
    for (int k = j + 1; k < n; ++k) circuit.apply_gate(d, generator_of(k), a.params[static_cast<std::size_t>(k)]);
    out.push_back(std::move(d));
  }
  return out;
}

SRMatrix sr_matrix(const HVAnsatz& a, bool block_diagonal) {
  const Eigen::VectorXcd psi = prepare(a).amplitudes();
  const auto d = derivative_states(a);
  const int n = a.n_params();
  std::vector<cplx> overlap(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) overlap[static_cast<std::size_t>(i)] = psi.dot(d[static_cast<std::size_t>(i)]);
  SRMatrix s{Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (block_diagonal && i / HVAnsatz::kGeneratorsPerBlock != j / HVAnsatz::kGeneratorsPerBlock) continue;
      const cplx value = d[static_cast<std::size_t>(i)].dot(d[static_cast<std::size_t>(j)]) -
                         std::conj(overlap[static_cast<std::size_t>(i)]) * overlap[static_cast<std::size_t>(j)];
      s.entries(i, j) = s.entries(j, i) = value.real();
    }
  }
  return s;
}

}  // namespace zvlab
