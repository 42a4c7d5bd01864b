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

#include "zvlab/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

void check_capacity(int n) {
  if (n < 1) throw DimensionError("qubit count must be positive");
  if (n > kMaxStateQubits) {
    throw CapacityError("state vector of " + std::to_string(n) + " qubits exceeds the " +
                        std::to_string(kMaxStateQubits) + "-qubit ceiling");
  }
}

// Applies a 2x2 unitary on `qubit` in place.
void apply_single(Eigen::VectorXcd& v, int qubit, const Eigen::Matrix2cd& u) {
  const Eigen::Index dim = v.size();
  const Eigen::Index stride = Eigen::Index{1} << qubit;
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index i = base; i < base + stride; ++i) {
      const cplx a0 = v[i];
      const cplx a1 = v[i + stride];
      v[i] = u(0, 0) * a0 + u(0, 1) * a1;
      v[i + stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

Eigen::Matrix2cd hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  return h;
}

}  // namespace

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes, bool normalize)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  check_capacity(n_qubits);
  if (static_cast<std::uint64_t>(amps_.size()) != dim()) {
    throw DimensionError("amplitude vector length must be 2^n_qubits");
  }
  if (normalize) {
    const double nrm = amps_.norm();
    if (nrm == 0.0) throw NumericalError("cannot normalize the zero vector");
    amps_ /= nrm;
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  check_capacity(n_qubits);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  if (index >= static_cast<std::uint64_t>(v.size())) throw DimensionError("basis index exceeds 2^n");
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(v));
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(dim());
  for (std::uint64_t i = 0; i < dim(); ++i) p[i] = std::norm(amps_[static_cast<Eigen::Index>(i)]);
  return p;
}

StateVector init_plus(int n) {
  check_capacity(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  return StateVector(n, Eigen::VectorXcd::Constant(dim, cplx(std::pow(2.0, -0.5 * n), 0.0)));
}

StateVector apply_exp_zz(const StateVector& s, double theta, const TFIMModel& model) {
  if (model.L != s.n_qubits()) throw DimensionError("model size does not match the state");
  Eigen::VectorXcd v = s.amplitudes();
  const auto bonds = model.bonds();
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    int total = 0;
    const auto ub = static_cast<std::uint64_t>(b);
    for (const auto& [i, j] : bonds) total += (((ub >> i) ^ (ub >> j)) & 1U) ? -1 : 1;
    v[b] *= std::polar(1.0, -theta * model.J * total);
  }
  return StateVector(s.n_qubits(), std::move(v));
}

StateVector apply_exp_x(const StateVector& s, double theta, const TFIMModel& model) {
  if (model.L != s.n_qubits()) throw DimensionError("model size does not match the state");
  // exp(-i a X) = cos a - i sin a X with a = theta * Gamma.
  const double a = theta * model.Gamma;
  Eigen::Matrix2cd u;
  u << std::cos(a), cplx(0.0, -std::sin(a)), cplx(0.0, -std::sin(a)), std::cos(a);
  Eigen::VectorXcd v = s.amplitudes();
  for (int k = 0; k < s.n_qubits(); ++k) apply_single(v, k, u);
  return StateVector(s.n_qubits(), std::move(v));
}

StateVector apply_pauli(const StateVector& s, const PauliString& p) {
  if (p.n_qubits() != s.n_qubits()) throw DimensionError("Pauli string size does not match the state");
  const auto& a = s.amplitudes();
  Eigen::VectorXcd out(a.size());
  for (Eigen::Index b = 0; b < a.size(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    out[static_cast<Eigen::Index>(ub ^ p.x_mask())] = p.phase_on_basis(ub) * a[b];
  }
  return StateVector(s.n_qubits(), std::move(out));
}

Eigen::VectorXcd apply_sum(const PauliSum& h, const Eigen::VectorXcd& v) {
  if ((Eigen::Index{1} << h.n_qubits()) != v.size()) {
    throw DimensionError("operator size does not match the vector");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const auto& t : h.terms()) {
    const std::uint64_t x = t.string.x_mask();
    for (Eigen::Index b = 0; b < v.size(); ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      out[static_cast<Eigen::Index>(ub ^ x)] += t.coeff * t.string.phase_on_basis(ub) * v[b];
    }
  }
  return out;
}

double expectation(const StateVector& s, const PauliSum& h) {
  if (h.n_qubits() != s.n_qubits()) throw DimensionError("operator size does not match the state");
  const cplx value = s.amplitudes().dot(apply_sum(h, s.amplitudes()));  // conjugates lhs
  if (std::abs(value.imag()) > 1e-10) {
    throw HermiticityError("expectation value has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

StateVector rotate_to_x_basis(const StateVector& s) {
  return rotate_to_basis(s, std::string(static_cast<std::size_t>(s.n_qubits()), 'X'));
}

StateVector rotate_to_basis(const StateVector& s, std::string_view bases) {
  if (static_cast<int>(bases.size()) != s.n_qubits()) {
    throw DimensionError("basis string length must equal the qubit count");
  }
  Eigen::Matrix2cd y_to_z;  // H S^dagger
  y_to_z = hadamard() * Eigen::Vector2cd(1.0, cplx(0.0, -1.0)).asDiagonal();
  Eigen::VectorXcd v = s.amplitudes();
  for (int k = 0; k < s.n_qubits(); ++k) {
    switch (bases[static_cast<std::size_t>(k)]) {
      case 'Z':
      case 'I':
        break;
      case 'X':
        apply_single(v, k, hadamard());
        break;
      case 'Y':
        apply_single(v, k, y_to_z);
        break;
      default:
        throw DimensionError("unknown measurement basis letter");
    }
  }
  return StateVector(s.n_qubits(), std::move(v));
}

BasisSampler::BasisSampler(const StateVector& s) : cdf_(s.dim()) {
  double acc = 0.0;
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    acc += std::norm(s.amplitude(i));
    cdf_[i] = acc;
  }
}

std::uint64_t BasisSampler::draw(Rng& rng) const {
  const double u = rng.uniform() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) it = std::prev(cdf_.end());
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

std::vector<std::uint64_t> sample_indices(const StateVector& s, std::int64_t shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shot count must be at least 1");
  const BasisSampler sampler(s);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(shots));
  for (auto& o : out) o = sampler.draw(rng);
  return out;
}

std::vector<SpinConfiguration> sample_z(const StateVector& s, std::int64_t shots, Rng& rng) {
  std::vector<SpinConfiguration> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (const auto idx : sample_indices(s, shots, rng)) out.emplace_back(s.n_qubits(), idx);
  return out;
}

void write_state(const StateVector& s, const std::filesystem::path& path) {
  static_assert(std::endian::native == std::endian::little, "state dumps assume a little-endian host");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::uint64_t n = static_cast<std::uint64_t>(s.n_qubits());
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(s.amplitudes().data()),
            static_cast<std::streamsize>(s.dim() * sizeof(cplx)));
}

StateVector read_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!in || n < 1 || n > static_cast<std::uint64_t>(kMaxStateQubits)) {
    throw ParseError(path.string() + ": bad qubit count header");
  }
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(cplx)));
  if (!in) throw ParseError(path.string() + ": truncated amplitude block");
  return StateVector(static_cast<int>(n), std::move(v));
}

}  // namespace zvlab
