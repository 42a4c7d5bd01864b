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

#ifndef ZVLAB_HV_ANSATZ_H
#define ZVLAB_HV_ANSATZ_H

#include <vector>

#include <Eigen/Dense>

#include "zvlab/spectrum.h"
#include "zvlab/state_vector.h"
#include "zvlab/tfim.h"

namespace zvlab {

/// Hamiltonian-variational circuit for the TFIM: d blocks, each
/// exp(i theta_2 H_2) exp(i theta_1 H_1), acting on |+>^L. Parameters are
/// laid out block by block: (theta^1_1, theta^1_2, theta^2_1, theta^2_2, ...).
struct HVAnsatz {
  static constexpr int kGeneratorsPerBlock = 2;

  TFIMModel model;
  int depth = 1;
  std::vector<double> params;

  HVAnsatz(TFIMModel m, int d);
  HVAnsatz(TFIMModel m, int d, std::vector<double> theta);

  int n_params() const { return kGeneratorsPerBlock * depth; }
};

StateVector prepare(const HVAnsatz& a);

/// H_1 + H_2 of the ansatz's model as an Ising operator (fast matvec).
IsingOperator hamiltonian_operator(const TFIMModel& model);

struct EnergyGradient {
  double energy;
  Eigen::VectorXd gradient;  // d<H>/d theta
};

/// Exact energy and gradient by reverse-mode (adjoint) state differentiation.
EnergyGradient energy_and_gradient(const HVAnsatz& a);

double exact_energy(const HVAnsatz& a);

/// |d_j psi> for every parameter, as raw vectors.
std::vector<Eigen::VectorXcd> derivative_states(const HVAnsatz& a);

struct SRMatrix {
  Eigen::MatrixXd entries;
  int dimension() const { return static_cast<int>(entries.rows()); }
};

/// S_ij = Re[<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>]. With
/// `block_diagonal` set, only entries whose parameters share a circuit block
/// are kept.
SRMatrix sr_matrix(const HVAnsatz& a, bool block_diagonal = false);

}  // namespace zvlab

#endif  // ZVLAB_HV_ANSATZ_H
