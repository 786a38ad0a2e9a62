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

// Numerical certificates for the operator identities the protocol rests on.
// Each check reports the largest deviation seen over its cases.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "qclone/protocol.hpp"
#include "qclone/random.hpp"

namespace qclone {

struct IdentityCheck {
  std::string name;
  double max_deviation = 0.0;
  std::size_t cases = 0;
  bool passed = false;
};

struct IdentityReport {
  int d = 0;
  double tolerance = kDefaultTolerance;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const IdentityCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

struct VerifyOptions {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 2026;
  /// random draws for identities quantified over arbitrary operators/states
  std::size_t samples = 50;
  /// party counts used for the unitarity checks; skipped past the size cap
  std::vector<int> party_counts{1, 2};
  SizeCaps caps{};
};

namespace detail {

class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string name) : check_{std::move(name), 0.0, 0, false} {}

  void observe(double deviation) {
    ++check_.cases;
    // NaN sticks as a failure
    if (!(deviation <= check_.max_deviation)) check_.max_deviation = deviation;
  }
  void observe(const ComplexMatrix& actual, const ComplexMatrix& expected) {
    observe(max_abs_diff(actual, expected));
  }
  void observe(Complex actual, Complex expected) { observe(std::abs(actual - expected)); }

  IdentityCheck finish(double tol) {
    check_.passed = check_.cases > 0 && check_.max_deviation <= tol;
    return check_;
  }

 private:
  IdentityCheck check_;
};

}  // namespace detail

/// Runs every identity check at dimension d.
inline IdentityReport verify_identities(int d, const VerifyOptions& options = {}) {
  require_dimension(d);
  using detail::CheckAccumulator;
  IdentityReport report{d, options.tolerance, {}};
  const double tol = options.tolerance;
  Rng rng(options.seed + static_cast<std::uint64_t>(d));

  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix id2 = ComplexMatrix::Identity(d * d, d * d);
  const ComplexMatrix x = shift_x(d);
  const ComplexMatrix z = phase_z(d);
  const ComplexMatrix f = fourier(d);
  const ComplexVector phi = bell_state(d).amplitudes();
  const ComplexMatrix phi_proj = phi * phi.adjoint();

  // Bell-basis vectors (X^k Z^l (x) I)|Phi>, indexed k*d + l.
  std::vector<ComplexVector> basis;
  std::vector<ComplexMatrix> displacement;
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      displacement.push_back(weyl_displacement(WeylIndex(d, k, l)));
      basis.push_back(kron(displacement.back(), id) * phi);
    }
  }
  const auto dd = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);

  {
    CheckAccumulator acc("weyl_group_order");
    acc.observe(detail::matrix_power(x, d), id);
    acc.observe(detail::matrix_power(z, d), id);
    acc.observe(x.adjoint(), detail::matrix_power(x, d - 1));
    acc.observe(z.adjoint(), detail::matrix_power(z, d - 1));
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator acc("weyl_commutation");
    acc.observe(z * x, omega_power(d, 1) * x * z);
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator acc("fourier_conjugation");
    acc.observe(f.adjoint() * z * f, x);
    acc.observe(is_unitary(f, tol).max_deviation);
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator acc("bell_preparation");
    ComplexVector ket = ComplexVector::Zero(d * d);
    ket(0) = 1.0;
    acc.observe(controlled_power(x, d) * kron(f, id) * ket, phi);
    report.checks.push_back(acc.finish(tol));
  }
  {
    // (U (x) I)|Phi> == (I (x) U^T)|Phi> for arbitrary U
    CheckAccumulator acc("ricochet");
    for (std::size_t s = 0; s < options.samples; ++s) {
      const ComplexMatrix u = random_operator(d, rng);
      acc.observe(kron(u, id) * phi, kron(id, u.transpose()) * phi);
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    // C on (S, N) maps (1/d) sum_mn W_mn|psi>_A (W_mn (x) I)|Phi>_SN to
    // |Phi>_AS |psi>_N.
    CheckAccumulator acc("bell_swap_transfer");
    const ComplexMatrix c = c_gate(d);
    const std::vector<std::size_t> sn{1, 2};
    for (std::size_t s = 0; s < options.samples; ++s) {
      const ComplexVector psi = random_unit_vector(static_cast<std::size_t>(d), rng);
      ComplexMatrix state = ComplexMatrix::Zero(d * d * d, 1);
      for (std::size_t i = 0; i < dd; ++i) {
        state += kron_vector(displacement[i] * psi, basis[i]);
      }
      state /= static_cast<double>(d);
      apply_on_wires(state, c, d, 3, sn);
      acc.observe(state, kron_vector(phi, psi));
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator acc("bell_basis_orthonormality");
    for (std::size_t i = 0; i < dd; ++i) {
      for (std::size_t j = 0; j < dd; ++j) {
        acc.observe(basis[i].dot(basis[j]), Complex{i == j ? 1.0 : 0.0, 0.0});
      }
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator acc("bell_projector_algebra");
    std::vector<ComplexMatrix> proj;
    for (const auto& v : basis) proj.push_back(v * v.adjoint());
    const ComplexMatrix zero = ComplexMatrix::Zero(d * d, d * d);
    for (std::size_t i = 0; i < dd; ++i) {
      for (std::size_t j = 0; j < dd; ++j) {
        acc.observe(proj[i] * proj[j], i == j ? proj[i] : zero);
      }
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator acc("bell_basis_completeness");
    ComplexMatrix sum = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& v : basis) sum += v * v.adjoint();
    acc.observe(sum, id2);
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator acc("chu_gauss_sum");
    for (int m = 0; m < d; ++m) {
      acc.observe(gauss_sum(d, m), Complex{m == 0 ? static_cast<double>(d) : 0.0, 0.0});
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    // (X^k1 Z^-k2 (x) X^k1 Z^k2)|Phi> == |Phi>
    CheckAccumulator acc("bell_pair_invariance");
    for (int k1 = 0; k1 < d; ++k1) {
      for (int k2 = 0; k2 < d; ++k2) {
        const ComplexMatrix left = shift_x_power(d, k1) * phase_z_power(d, -k2);
        const ComplexMatrix right = shift_x_power(d, k1) * phase_z_power(d, k2);
        acc.observe(kron(left, right) * phi, phi);
      }
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    // Tr_B((O1 (x) I)|Phi><Phi|(O2^dagger (x) I)) == O1 O2^dagger / d
    CheckAccumulator acc("bell_marginal_trace");
    const std::vector<std::size_t> keep_a{0};
    for (std::size_t s = 0; s < options.samples; ++s) {
      const ComplexMatrix o1 = random_operator(d, rng);
      const ComplexMatrix o2 = random_operator(d, rng);
      const ComplexMatrix rho = kron(o1, id) * phi_proj * kron(o2.adjoint(), id);
      acc.observe(partial_trace(rho, d, 2, keep_a), o1 * o2.adjoint() / static_cast<double>(d));
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    // Tr((X^k Z^l (x) I)|Phi><Phi|(Z^-n X^-m (x) I)) == delta_km delta_ln
    CheckAccumulator acc("bell_overlap_trace");
    for (std::size_t i = 0; i < dd; ++i) {
      const ComplexMatrix left = kron(displacement[i], id) * phi_proj;
      for (std::size_t j = 0; j < dd; ++j) {
        const ComplexMatrix op = left * kron(displacement[j].adjoint(), id);
        acc.observe(op.trace(), Complex{i == j ? 1.0 : 0.0, 0.0});
      }
    }
    report.checks.push_back(acc.finish(tol));
  }
  {
    CheckAccumulator enc("encryption_unitarity");
    CheckAccumulator dec("decryption_unitarity");
    for (int n : options.party_counts) {
      try {
        const ProtocolParams params(d, n, 1, options.caps);
        enc.observe(is_unitary(v_of_pauli(PauliAxis::X, d, n, options.caps), tol).max_deviation);
        enc.observe(is_unitary(v_of_pauli(PauliAxis::Z, d, n, options.caps), tol).max_deviation);
        enc.observe(is_unitary(u_enc(params), tol).max_deviation);
        dec.observe(is_unitary(u_dec_stripped(params), tol).max_deviation);
        dec.observe(is_unitary(u_dec_dense(params), tol).max_deviation);
      } catch (const SizeCapError&) {
        continue;
      }
    }
    report.checks.push_back(enc.finish(tol));
    report.checks.push_back(dec.finish(tol));
  }
  return report;
}

}  // namespace qclone
