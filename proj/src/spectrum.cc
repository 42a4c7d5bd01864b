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

#include "zvlab/spectrum.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

void check_dense(int n) {
  if (n > kMaxDenseQubits) {
    throw CapacityError("dense diagonalization limited to " + std::to_string(kMaxDenseQubits) +
                        " qubits, got " + std::to_string(n));
  }
}

Eigen::VectorXcd fix_phase(Eigen::VectorXcd v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-10) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      break;
    }
  }
  return v;
}

}  // namespace

std::vector<Eigenpair> exact_spectrum(const PauliSum& h, int k) {
  check_dense(h.n_qubits());
  if (h.max_imag() > 1e-10) throw HermiticityError("exact_spectrum needs real coefficients");
  const Eigen::MatrixXcd m = h.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  const auto& values = solver.eigenvalues();
  const Eigen::Index dim = values.size();
  Eigen::Index count = std::min<Eigen::Index>(std::max(k, 0), dim);
  while (count > 0 && count < dim && std::abs(values[count] - values[count - 1]) < 1e-9) ++count;
  std::vector<Eigenpair> out;
  for (Eigen::Index i = 0; i < count; ++i) {
    out.push_back({values[i], StateVector(h.n_qubits(), fix_phase(solver.eigenvectors().col(i)), true)});
  }
  return out;
}

StateVector evolve(const StateVector& s, const PauliSum& h, double t, Evolution method) {
  if (h.n_qubits() != s.n_qubits()) throw DimensionError("operator size does not match the state");
  if (h.max_imag() > 1e-10) throw HermiticityError("evolve needs a Hermitian PauliSum");
  if (method.kind == Evolution::Kind::kExact) {
    check_dense(h.n_qubits());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.dense());
    if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
    const auto& vecs = solver.eigenvectors();
    Eigen::VectorXcd c = vecs.adjoint() * s.amplitudes();
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] *= std::polar(1.0, -solver.eigenvalues()[i] * t);
    return StateVector(s.n_qubits(), vecs * c);
  }

  if (method.steps < 1) throw std::invalid_argument("Trotter step count must be positive");
  const double dt = t / method.steps;
  // Diagonal part as a phase table; off-diagonal terms applied one by one.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s.dim()));
  std::vector<PauliTerm> off;
  for (const auto& term : h.terms()) {
    if (term.string.is_diagonal()) {
      for (Eigen::Index b = 0; b < diag.size(); ++b) {
        diag[b] += (term.coeff * term.string.phase_on_basis(static_cast<std::uint64_t>(b))).real();
      }
    } else {
      off.push_back(term);
    }
  }
  Eigen::VectorXcd v = s.amplitudes();
  Eigen::VectorXcd tmp(v.size());
  for (int step = 0; step < method.steps; ++step) {
    for (Eigen::Index b = 0; b < v.size(); ++b) v[b] *= std::polar(1.0, -diag[b] * dt);
    for (const auto& term : off) {
      // exp(-i c P dt) = cos(c dt) - i sin(c dt) P
      const double a = term.coeff.real() * dt;
      const std::uint64_t x = term.string.x_mask();
      for (Eigen::Index b = 0; b < v.size(); ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        tmp[static_cast<Eigen::Index>(ub ^ x)] = term.string.phase_on_basis(ub) * v[b];
      }
      v = std::cos(a) * v + cplx(0.0, -std::sin(a)) * tmp;
    }
  }
  return StateVector(s.n_qubits(), std::move(v));
}

Eigen::VectorXcd IsingOperator::apply(const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index b = 0; b < v.size(); ++b) out[b] = diagonal[static_cast<std::size_t>(b)] * v[b];
  if (field != 0.0) {
    for (int k = 0; k < L; ++k) {
      const Eigen::Index bit = Eigen::Index{1} << k;
      for (Eigen::Index b = 0; b < v.size(); ++b) out[b] -= field * v[b ^ bit];
    }
  }
  return out;
}

Eigen::MatrixXd IsingOperator::dense() const {
  check_dense(L);
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    m(b, b) = diagonal[static_cast<std::size_t>(b)];
    for (int k = 0; k < L; ++k) m(b ^ (Eigen::Index{1} << k), b) -= field;
  }
  return m;
}

std::pair<double, double> IsingOperator::spectral_bounds() const {
  const auto [lo, hi] = std::minmax_element(diagonal.begin(), diagonal.end());
  const double spread = std::abs(field) * L;
  return {*lo - spread, *hi + spread};
}

namespace {

// J_0(x) .. J_n(x) for x >= 0 by Miller's downward recurrence, normalised
// with J_0 + 2 sum_k J_2k = 1.
std::vector<double> bessel_j_sequence(double x, int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  if (x < 1e-300) {
    out[0] = 1.0;
    return out;
  }
  const int start = 2 * ((std::max(n, static_cast<int>(x)) + static_cast<int>(20.0 * std::cbrt(x)) + 60) / 2);
  double next = 0.0, curr = 1e-300, norm = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = 2.0 * k / x * curr - next;
    next = curr;
    curr = prev;  // J_{k-1}, unnormalised
    if (k - 1 <= n) out[static_cast<std::size_t>(k - 1)] = curr;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0 ? 1.0 : 2.0) * curr;
    if (std::abs(curr) > 1e250) {
      for (auto& v : out) v *= 1e-250;
      next *= 1e-250;
      curr *= 1e-250;
      norm *= 1e-250;
    }
  }
  for (auto& v : out) v /= norm;
  return out;
}

}  // namespace

Eigen::VectorXcd chebyshev_propagate(const IsingOperator& h, const Eigen::VectorXcd& v, double t) {
  if (static_cast<std::size_t>(v.size()) != h.diagonal.size()) {
    throw DimensionError("vector length does not match the operator");
  }
  auto [lo, hi] = h.spectral_bounds();
  const double half_width = std::max(0.5 * (hi - lo), 1e-12);
  const double center = 0.5 * (hi + lo);
  const double x = half_width * t;  // Bessel argument
  const double ax = std::abs(x);

  // e^{-i x H'} = J_0(x) + 2 sum_k (-i)^k J_k(x) T_k(H'), with
  // H' = (H - center) / half_width spectrally inside [-1, 1].
  const int max_order = static_cast<int>(ax + 20.0 * std::cbrt(ax)) + 40;
  std::vector<double> jk = bessel_j_sequence(ax, max_order);
  if (x < 0) {
    for (std::size_t k = 1; k < jk.size(); k += 2) jk[k] = -jk[k];  // J_k(-x) = (-1)^k J_k(x)
  }

  const Eigen::Index dim = v.size();
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (Eigen::Index b = 0; b < dim; ++b) diag[static_cast<std::size_t>(b)] = (h.diagonal[static_cast<std::size_t>(b)] - center) / half_width;
  const double f = h.field / half_width;
  // out = 2 H' in - prev, in place into `prev`.
  auto recur = [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& prev, double scale) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      cplx acc = diag[static_cast<std::size_t>(b)] * in[b];
      for (int k = 0; k < h.L; ++k) acc -= f * in[b ^ (Eigen::Index{1} << k)];
      prev[b] = scale * acc - prev[b];
    }
  };

  Eigen::VectorXcd prev = v;
  Eigen::VectorXcd curr = Eigen::VectorXcd::Zero(dim);
  recur(v, curr, 1.0);  // T_1 v
  Eigen::VectorXcd result = jk[0] * v;
  cplx minus_i_pow(0.0, -1.0);
  for (int k = 1; k <= max_order; ++k) {
    result += 2.0 * minus_i_pow * jk[static_cast<std::size_t>(k)] * curr;
    if (k > ax && std::abs(jk[static_cast<std::size_t>(k)]) < 1e-17) break;
    recur(curr, prev, 2.0);  // prev <- T_{k+1} v
    std::swap(prev, curr);
    minus_i_pow *= cplx(0.0, -1.0);
  }
  return result * std::polar(1.0, -center * t);
}

}  // namespace zvlab
