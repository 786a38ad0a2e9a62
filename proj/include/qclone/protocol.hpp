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

// Encryption and decryption unitaries and the end-to-end protocol run.

#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qclone/cazac.hpp"
#include "qclone/circuit.hpp"
#include "qclone/params.hpp"
#include "qclone/weyl.hpp"

namespace qclone {

enum class PauliAxis { X, Z };

/// X_d^power or Z_d^power on every one of `wires` wires.
inline ComplexMatrix pauli_product_power(PauliAxis axis, int d, std::size_t wires,
                                         long long power, const SizeCaps& caps = {}) {
  const auto single = axis == PauliAxis::X ? shift_x_power(d, power) : phase_z_power(d, power);
  return kron_power(single, wires, caps);
}

/// P_X or P_Z across (A, S1..Sn).
inline ComplexMatrix pauli_product(PauliAxis axis, int d, int n, const SizeCaps& caps = {}) {
  (void)ProtocolParams(d, n, 1, caps);
  return pauli_product_power(axis, d, static_cast<std::size_t>(n) + 1, 1, caps);
}

/// V(P) = d^(-1/2) sum_k c(k) P^k for a unitary P of order dividing d.
inline ComplexMatrix v_of_p(const ComplexMatrix& p, int d) {
  require_dimension(d);
  if (!is_unitary(p)) throw StructureError("V(P) needs a unitary P");
  const auto c = chu(d);
  const auto dim = p.rows();
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix power = ComplexMatrix::Identity(dim, dim);
  for (int k = 0; k < d; ++k) {
    sum += c[static_cast<std::size_t>(k)] * power;
    power = power * p;
  }
  if (max_abs_diff(power, ComplexMatrix::Identity(dim, dim)) > kDefaultTolerance) {
    throw StructureError("V(P) needs P^d == I");
  }
  return sum / std::sqrt(static_cast<double>(d));
}

/// V(P_X) or V(P_Z) assembled from per-wire powers, avoiding dense matrix
/// powers. Equal to v_of_p(pauli_product(axis, d, n), d).
inline ComplexMatrix v_of_pauli(PauliAxis axis, int d, int n, const SizeCaps& caps = {}) {
  (void)ProtocolParams(d, n, 1, caps);
  const auto c = chu(d);
  const auto wires = static_cast<std::size_t>(n) + 1;
  const auto dim = static_cast<Eigen::Index>(ipow(d, wires));
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < d; ++k) {
    sum += c[static_cast<std::size_t>(k)] * pauli_product_power(axis, d, wires, k, caps);
  }
  return sum / std::sqrt(static_cast<double>(d));
}

/// exp(-i*theta*P). Unitary only when P is Hermitian.
inline ComplexMatrix exp_generalization(const ComplexMatrix& p, double theta) {
  if (p.rows() != p.cols()) throw DimensionError("exp_generalization expects a square matrix");
  const ComplexMatrix arg = Complex{0.0, -theta} * p;
  return arg.exp();
}

/// U_enc = V(P_X) V(P_Z) on (A, S1..Sn).
inline ComplexMatrix u_enc(const ProtocolParams& params) {
  params.validate();
  const ComplexMatrix vx = v_of_pauli(PauliAxis::X, params.d, params.n, params.caps);
  const ComplexMatrix vz = v_of_pauli(PauliAxis::Z, params.d, params.n, params.caps);
  // V(P_Z) is diagonal: scale columns instead of a dense product.
  return vx * vz.diagonal().asDiagonal();
}

/// C = (sum_c X^(2c) (x) |c><c|)(I (x) F^2) on (S, N): F^2 reverses N, then N
/// drives a shift of 2*level on S.
inline ComplexMatrix c_gate(int d) {
  require_dimension(d);
  ComplexMatrix controlled = ComplexMatrix::Zero(d * d, d * d);
  for (int c = 0; c < d; ++c) {
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    proj(c, c) = 1.0;
    controlled += kron(shift_x_power(d, 2LL * c), proj);
  }
  const ComplexMatrix f = fourier(d);
  return controlled * kron(ComplexMatrix::Identity(d, d), f * f);
}

/// A = sum_{k,l} conj(c_kl) Pi_kl (x) (X^k Z^-l)^(n-1) on (S_t, N_t, N_j...).
inline ComplexMatrix u_dec_stripped(const ProtocolParams& params) {
  params.validate();
  const int d = params.d;
  const auto grid = coeff_grid(d);
  const auto rest = static_cast<std::size_t>(params.n) - 1;
  const auto dim = static_cast<Eigen::Index>(ipow(d, rest + 2));
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      const ComplexMatrix correction =
          kron_power(shift_x_power(d, k) * phase_z_power(d, -l), rest, params.caps);
      a += std::conj(grid(k, l)) *
           kron(bell_projector(WeylIndex(d, k, l)), correction, params.caps);
    }
  }
  return a;
}

/// U_dec = ((SWAP C) (x) I) A on (S_t, N_t, N_j...).
inline ComplexMatrix u_dec_dense(const ProtocolParams& params) {
  ComplexMatrix u = u_dec_stripped(params);
  const ComplexMatrix swap_c = swap_gate(params.d) * c_gate(params.d);
  const std::vector<std::size_t> pair{0, 1};
  apply_on_wires(u, swap_c, params.d, static_cast<std::size_t>(params.n) + 1, pair);
  return u;
}

// ---------------------------------------------------------------------------

/// |psi>_A (x) Bell pairs on (S_i, N_i), in the canonical layout.
inline StateVector initial_state(const ProtocolParams& params, const StateVector& psi) {
  if (psi.reg().size() != 1 || psi.reg().d() != params.d) {
    throw DimensionError("data state must be a single qudit of dimension d");
  }
  StateVector state(Register(params.d, {"A"}), psi.amplitudes());
  for (int i = 1; i <= params.n; ++i) {
    state = tensor(state, bell_state(params.d, {params.s(i), params.nw(i)}));
  }
  return permute(state, Register::protocol(params.d, params.n).wires());
}

/// Expected decrypted state: Bell pair on (A, N_t), psi on S_t, Bell pairs on
/// the remaining (S_j, N_j).
inline StateVector expected_final_state(const ProtocolParams& params, const StateVector& psi) {
  const int t = params.target_party;
  StateVector state = tensor(bell_state(params.d, {"A", params.nw(t)}),
                             StateVector(Register(params.d, {params.s(t)}), psi.amplitudes()));
  for (int j = 1; j <= params.n; ++j) {
    if (j != t) state = tensor(state, bell_state(params.d, {params.s(j), params.nw(j)}));
  }
  return permute(state, Register::protocol(params.d, params.n).wires());
}

enum class DecryptionPath { Dense, Circuit };

struct BellResidual {
  std::string pair;
  double fidelity = 0.0;
};

struct ProtocolReport {
  int d = 0;
  int n = 0;
  int target_party = 1;
  std::uint64_t seed = 0;
  DecryptionPath path = DecryptionPath::Dense;
  double tolerance = kDefaultTolerance;
  /// max-norm distance of each S_i marginal from I/d after encryption
  std::vector<double> marginals;
  /// <psi| rho_{S_t} |psi> after decryption
  double decryption_fidelity = 0.0;
  /// |<expected|final>|, global phase ignored
  double closed_form_overlap = 0.0;
  std::vector<BellResidual> bell_residuals;
  std::map<std::string, double> timings_ms;

  bool marginals_pass() const {
    for (double m : marginals) {
      if (!(m <= tolerance)) return false;
    }
    return true;
  }
  bool decryption_pass() const {
    if (!(decryption_fidelity >= 1.0 - tolerance) || !(closed_form_overlap >= 1.0 - tolerance)) {
      return false;
    }
    for (const auto& r : bell_residuals) {
      if (!(r.fidelity >= 1.0 - tolerance)) return false;
    }
    return true;
  }
  bool passed() const { return marginals_pass() && decryption_pass(); }
};

struct RunOptions {
  std::uint64_t seed = 0;
  DecryptionPath path = DecryptionPath::Dense;
  double tolerance = kDefaultTolerance;
};

/// Encrypts psi across n parties, checks every S_i marginal, decrypts onto
/// S_t, and compares against the expected final state.
inline ProtocolReport run_protocol(const ProtocolParams& params, const StateVector& psi,
                                   const RunOptions& options = {}) {
  using Clock = std::chrono::steady_clock;
  auto elapsed_ms = [](Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
  };
  params.validate();
  params.state_dim();

  ProtocolReport report;
  report.d = params.d;
  report.n = params.n;
  report.target_party = params.target_party;
  report.seed = options.seed;
  report.path = options.path;
  report.tolerance = options.tolerance;

  const int d = params.d;
  auto start = Clock::now();
  StateVector state = initial_state(params, psi);
  state = embed_apply(state, u_enc(params), params.encryption_wires());
  report.timings_ms["encrypt"] = elapsed_ms(start);

  start = Clock::now();
  const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  for (int i = 1; i <= params.n; ++i) {
    const auto rho = reduced_density(state, {params.s(i)});
    report.marginals.push_back(max_abs_diff(rho.matrix(), mixed));
  }
  report.timings_ms["marginals"] = elapsed_ms(start);

  start = Clock::now();
  if (options.path == DecryptionPath::Dense) {
    state = embed_apply(state, u_dec_dense(params), params.decryption_wires());
  } else {
    state = apply_circuit(state, build_udec_circuit(params), params.decryption_wires());
  }
  report.timings_ms["decrypt"] = elapsed_ms(start);

  start = Clock::now();
  const int t = params.target_party;
  const StateVector data(Register(d, {params.s(t)}), psi.amplitudes());
  report.decryption_fidelity = fidelity(reduced_density(state, {params.s(t)}), data);
  report.closed_form_overlap = std::abs(overlap(expected_final_state(params, psi), state));

  auto residual = [&](const std::string& a, const std::string& b) {
    const auto rho = reduced_density(state, {a, b});
    report.bell_residuals.push_back({a + "," + b, fidelity(rho, bell_state(d, {a, b}))});
  };
  residual("A", params.nw(t));
  for (int j = 1; j <= params.n; ++j) {
    if (j != t) residual(params.s(j), params.nw(j));
  }
  report.timings_ms["verify"] = elapsed_ms(start);
  return report;
}

}  // namespace qclone
