// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Generalized Pauli (Weyl) operators, the qudit Fourier transform, controlled
// gates, and the generalized Bell state.

#include <cmath>
#include <numbers>

#include "qclone/tensor.hpp"

namespace qclone {

/// Primitive d-th root of unity raised to `power`, reduced exactly mod d.
inline Complex omega_power(int d, long long power) {
  long long r = power % d;
  if (r < 0) r += d;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
  return {std::cos(angle), std::sin(angle)};
}

inline int mod(long long value, int d) {
  long long r = value % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

/// X_d^power: |k> -> |k + power mod d>. Negative powers wrap.
inline ComplexMatrix shift_x_power(int d, long long power) {
  require_dimension(d);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) m(mod(k + power, d), k) = 1.0;
  return m;
}

/// Z_d^power: |k> -> omega^(k*power) |k>.
inline ComplexMatrix phase_z_power(int d, long long power) {
  require_dimension(d);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) m(k, k) = omega_power(d, static_cast<long long>(k) * power);
  return m;
}

inline ComplexMatrix shift_x(int d) { return shift_x_power(d, 1); }
inline ComplexMatrix phase_z(int d) { return phase_z_power(d, 1); }

/// F|k> = d^(-1/2) sum_j omega^(jk) |j>
inline ComplexMatrix fourier(int d) {
  require_dimension(d);
  ComplexMatrix m(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      m(j, k) = scale * omega_power(d, static_cast<long long>(j) * k);
    }
  }
  return m;
}

namespace detail {

inline void require_unitary_gate(const ComplexMatrix& u, int d) {
  require_dimension(d);
  if (u.rows() != d || u.cols() != d) {
    throw DimensionError("gate must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  const auto report = is_unitary(u, kDefaultTolerance);
  if (!report) {
    throw StructureError("gate is not unitary (deviation " +
                         std::to_string(report.max_deviation) + ")");
  }
}

inline ComplexMatrix matrix_power(const ComplexMatrix& u, int power) {
  ComplexMatrix out = ComplexMatrix::Identity(u.rows(), u.cols());
  for (int i = 0; i < power; ++i) out = out * u;
  return out;
}

}  // namespace detail

/// C(U)|j>|k> = |j> U^j |k>, control on the first wire.
inline ComplexMatrix controlled_power(const ComplexMatrix& u, int d) {
  detail::require_unitary_gate(u, d);
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  ComplexMatrix power = ComplexMatrix::Identity(d, d);
  for (int j = 0; j < d; ++j) {
    out.block(j * d, j * d, d, d) = power;
    power = power * u;
  }
  return out;
}

/// C_p(U)|j>|k> = |j> U^(j*delta(p,j)) |k>: U^p fires only on control level p.
inline ComplexMatrix p_controlled(const ComplexMatrix& u, int d, int p) {
  detail::require_unitary_gate(u, d);
  if (p < 0 || p >= d) {
    throw ParameterError("control level " + std::to_string(p) + " outside [0, d)");
  }
  ComplexMatrix out = ComplexMatrix::Identity(d * d, d * d);
  out.block(p * d, p * d, d, d) = detail::matrix_power(u, p);
  return out;
}

/// SWAP|j>|k> = |k>|j>
inline ComplexMatrix swap_gate(int d) {
  require_dimension(d);
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) out(k * d + j, j * d + k) = 1.0;
  }
  return out;
}

/// |Phi_d> = d^(-1/2) sum_p |p>|p>
inline StateVector bell_state(int d, WireList wires = {"q0", "q1"}) {
  require_dimension(d);
  if (wires.size() != 2) throw DimensionError("Bell state spans two wires");
  ComplexVector v = ComplexVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int p = 0; p < d; ++p) v(p * d + p) = amp;
  return StateVector(Register(d, std::move(wires)), std::move(v));
}

/// Exponent pair (k, l) of the displacement X_d^k Z_d^l.
struct WeylIndex {
  int d;
  int k;
  int l;

  WeylIndex(int dim, int x_power, int z_power) : d(dim), k(x_power), l(z_power) {
    require_dimension(d);
    if (k < 0 || k >= d || l < 0 || l >= d) {
      throw ParameterError("Weyl exponents must lie in [0, d)");
    }
  }
};

/// X_d^k Z_d^l
inline ComplexMatrix weyl_displacement(const WeylIndex& idx) {
  return shift_x_power(idx.d, idx.k) * phase_z_power(idx.d, idx.l);
}

/// (X_d^k Z_d^l (x) I) |Phi_d>
inline StateVector bell_basis_state(const WeylIndex& idx, WireList wires = {"q0", "q1"}) {
  auto phi = bell_state(idx.d, std::move(wires));
  return embed_apply(phi, weyl_displacement(idx), {phi.reg().wires()[0]});
}

/// Pi_kl = |Phi_kl><Phi_kl| with |Phi_kl> the Bell-basis state of `idx`.
inline ComplexMatrix bell_projector(const WeylIndex& idx) {
  const auto v = bell_basis_state(idx).amplitudes();
  return v * v.adjoint();
}

}  // namespace qclone
