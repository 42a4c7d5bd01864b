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

#ifndef ZVLAB_STATE_VECTOR_H
#define ZVLAB_STATE_VECTOR_H

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zvlab/pauli.h"
#include "zvlab/rng.h"
#include "zvlab/spin.h"
#include "zvlab/tfim.h"

namespace zvlab {

inline constexpr int kMaxStateQubits = 26;

/// Dense amplitude vector over 2^n basis states; basis index bit k is qubit k.
/// Values are immutable from the outside: every gate returns a new state.
class StateVector {
 public:
  /// Takes ownership of `amplitudes`; normalizes when `normalize` is set.
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes, bool normalize = false);

  /// Computational basis state |index>.
  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  cplx amplitude(std::uint64_t index) const { return amps_[static_cast<Eigen::Index>(index)]; }
  double norm() const { return amps_.norm(); }

  /// Probabilities |c_i|^2.
  std::vector<double> probabilities() const;

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

/// |+>^n.
StateVector init_plus(int n);

/// exp(i theta H_1), H_1 = -J sum Z_k Z_{k+1}.
StateVector apply_exp_zz(const StateVector& s, double theta, const TFIMModel& model);

/// exp(i theta H_2), H_2 = -Gamma sum X_k.
StateVector apply_exp_x(const StateVector& s, double theta, const TFIMModel& model);

/// Applies a Pauli string (a unitary) to the state.
StateVector apply_pauli(const StateVector& s, const PauliString& p);

/// Unnormalized H|psi> as a raw vector.
Eigen::VectorXcd apply_sum(const PauliSum& h, const Eigen::VectorXcd& v);

/// <psi|H|psi>. Throws HermiticityError when the imaginary part exceeds 1e-10.
double expectation(const StateVector& s, const PauliSum& h);

/// Hadamard on every qubit.
StateVector rotate_to_x_basis(const StateVector& s);

/// Rotates each qubit so that measuring Z reads out the given letter
/// ('Z' untouched, 'X' via H, 'Y' via H S^dagger). bases[k] is qubit k.
StateVector rotate_to_basis(const StateVector& s, std::string_view bases);

/// Inverse-CDF sampler over |c_i|^2: one uniform draw per shot.
class BasisSampler {
 public:
  explicit BasisSampler(const StateVector& s);
  std::uint64_t draw(Rng& rng) const;

 private:
  std::vector<double> cdf_;
};

std::vector<std::uint64_t> sample_indices(const StateVector& s, std::int64_t shots, Rng& rng);

std::vector<SpinConfiguration> sample_z(const StateVector& s, std::int64_t shots, Rng& rng);

/// Debug dump: 8-byte little-endian qubit count followed by little-endian
/// (re, im) double pairs.
void write_state(const StateVector& s, const std::filesystem::path& path);
StateVector read_state(const std::filesystem::path& path);

}  // namespace zvlab

#endif  // ZVLAB_STATE_VECTOR_H
