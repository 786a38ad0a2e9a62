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

// Dense complex linear algebra over registers of equal-dimension qudits.
//
// Basis kets of a register are indexed big-endian in base d: the first wire
// of the register is the most significant digit.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qclone/errors.hpp"

namespace qclone {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using WireList = std::vector<std::string>;

inline constexpr double kDefaultTolerance = 1e-10;

struct SizeCaps {
  /// Largest row count of any dense operator.
  std::size_t max_operator_dim = 4096;
  /// Largest number of amplitudes in a state vector.
  std::size_t max_state_dim = std::size_t{1} << 22;
};

inline void require_dimension(int d) {
  if (d < 2) {
    throw ParameterError("qudit dimension must be >= 2, got " +
                         std::to_string(d));
  }
}

/// d^wires, throwing SizeCapError once the result passes `limit`.
inline std::size_t checked_power(int d, std::size_t wires, std::size_t limit) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < wires; ++i) {
    if (result > limit / static_cast<std::size_t>(d)) {
      throw SizeCapError("dimension " + std::to_string(d) + "^" +
                         std::to_string(wires) + " exceeds cap " +
                         std::to_string(limit));
    }
    result *= static_cast<std::size_t>(d);
  }
  return result;
}

inline std::size_t ipow(int d, std::size_t wires) {
  return checked_power(d, wires, std::numeric_limits<std::size_t>::max() / 2);
}

/// Ordered, uniquely labelled wires sharing one qudit dimension.
class Register {
 public:
  Register(int d, WireList wires) : d_(d), wires_(std::move(wires)) {
    require_dimension(d_);
    if (wires_.empty()) throw DimensionError("register needs at least one wire");
    std::unordered_set<std::string> seen;
    for (const auto& w : wires_) {
      if (!seen.insert(w).second) {
        throw DimensionError("duplicate wire label '" + w + "'");
      }
    }
  }

  /// Canonical protocol layout [A, S1..Sn, N1..Nn].
  static Register protocol(int d, int n) {
    if (n < 1) throw ParameterError("party count must be >= 1");
    WireList wires{"A"};
    for (int i = 1; i <= n; ++i) wires.push_back("S" + std::to_string(i));
    for (int i = 1; i <= n; ++i) wires.push_back("N" + std::to_string(i));
    return Register(d, std::move(wires));
  }

  int d() const { return d_; }
  std::size_t size() const { return wires_.size(); }
  const WireList& wires() const { return wires_; }
  std::size_t dim() const { return ipow(d_, wires_.size()); }

  std::size_t index_of(std::string_view label) const {
    auto it = std::find(wires_.begin(), wires_.end(), label);
    if (it == wires_.end()) {
      throw DimensionError("wire '" + std::string(label) + "' not in register");
    }
    return static_cast<std::size_t>(it - wires_.begin());
  }

  std::vector<std::size_t> indices_of(const WireList& labels) const {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto& l : labels) {
      auto idx = index_of(l);
      if (std::find(out.begin(), out.end(), idx) != out.end()) {
        throw DimensionError("wire '" + l + "' listed twice");
      }
      out.push_back(idx);
    }
    return out;
  }

  bool operator==(const Register&) const = default;

 private:
  int d_;
  WireList wires_;
};

// ---------------------------------------------------------------------------
// Index-level kernels. These work on raw Eigen storage so that identity checks
// can use non-unitary operators and non-normalized vectors.

/// Offsets of the local basis of `wires` (in the given order) within a
/// register of `num_wires` wires.
inline std::vector<std::size_t> local_offsets(int d, std::size_t num_wires,
                                              std::span<const std::size_t> wires) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t w : wires) {
    const std::size_t stride = ipow(d, num_wires - 1 - w);
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(d));
    for (std::size_t base : offsets) {
      for (int digit = 0; digit < d; ++digit) {
        next.push_back(base + static_cast<std::size_t>(digit) * stride);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

inline std::vector<std::size_t> complement_wires(std::size_t num_wires,
                                                 std::span<const std::size_t> wires) {
  std::vector<std::size_t> rest;
  for (std::size_t w = 0; w < num_wires; ++w) {
    if (std::find(wires.begin(), wires.end(), w) == wires.end()) rest.push_back(w);
  }
  return rest;
}

inline void check_wire_indices(std::size_t num_wires,
                               std::span<const std::size_t> wires) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= num_wires) {
      throw DimensionError("wire index " + std::to_string(wires[i]) +
                           " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (wires[i] == wires[j]) throw DimensionError("repeated wire index");
    }
  }
}

/// Applies `op` to `wires` of every column of `data`, with identity on the
/// remaining wires.
inline void apply_on_wires(ComplexMatrix& data, const ComplexMatrix& op, int d,
                           std::size_t num_wires,
                           std::span<const std::size_t> wires) {
  check_wire_indices(num_wires, wires);
  const auto local = local_offsets(d, num_wires, wires);
  if (op.rows() != static_cast<Eigen::Index>(local.size()) ||
      op.cols() != op.rows()) {
    throw DimensionError("operator dimension " + std::to_string(op.rows()) +
                         " does not match " + std::to_string(local.size()));
  }
  if (data.rows() != static_cast<Eigen::Index>(ipow(d, num_wires))) {
    throw DimensionError("data rows do not match register dimension");
  }
  const auto rest = complement_wires(num_wires, wires);
  const auto bases = local_offsets(d, num_wires, rest);
  const auto m = static_cast<Eigen::Index>(local.size());
  const auto b = static_cast<Eigen::Index>(bases.size());
  ComplexMatrix block(m, b);
  for (Eigen::Index col = 0; col < data.cols(); ++col) {
    for (Eigen::Index j = 0; j < b; ++j) {
      for (Eigen::Index i = 0; i < m; ++i) {
        block(i, j) = data(static_cast<Eigen::Index>(bases[j] + local[i]), col);
      }
    }
    const ComplexMatrix out = op * block;
    for (Eigen::Index j = 0; j < b; ++j) {
      for (Eigen::Index i = 0; i < m; ++i) {
        data(static_cast<Eigen::Index>(bases[j] + local[i]), col) = out(i, j);
      }
    }
  }
}

/// Traces out every wire not in `keep`; the result is ordered as `keep`.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int d,
                                   std::size_t num_wires,
                                   std::span<const std::size_t> keep) {
  if (keep.empty()) throw DimensionError("partial trace needs a nonempty keep set");
  check_wire_indices(num_wires, keep);
  if (rho.rows() != static_cast<Eigen::Index>(ipow(d, num_wires)) ||
      rho.cols() != rho.rows()) {
    throw DimensionError("density matrix does not match register dimension");
  }
  const auto kept = local_offsets(d, num_wires, keep);
  const auto traced = local_offsets(d, num_wires, complement_wires(num_wires, keep));
  const auto m = static_cast<Eigen::Index>(kept.size());
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t t : traced) {
        acc += rho(static_cast<Eigen::Index>(kept[r] + t),
                   static_cast<Eigen::Index>(kept[c] + t));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

/// Reduced density matrix of a pure state on `keep`, without forming the
/// full projector.
inline ComplexMatrix reduced_density(const ComplexVector& psi, int d,
                                     std::size_t num_wires,
                                     std::span<const std::size_t> keep) {
  if (keep.empty()) throw DimensionError("partial trace needs a nonempty keep set");
  check_wire_indices(num_wires, keep);
  if (psi.size() != static_cast<Eigen::Index>(ipow(d, num_wires))) {
    throw DimensionError("state does not match register dimension");
  }
  const auto kept = local_offsets(d, num_wires, keep);
  const auto traced = local_offsets(d, num_wires, complement_wires(num_wires, keep));
  ComplexMatrix block(static_cast<Eigen::Index>(kept.size()),
                      static_cast<Eigen::Index>(traced.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < traced.size(); ++j) {
      block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          psi(static_cast<Eigen::Index>(kept[i] + traced[j]));
    }
  }
  return block * block.adjoint();
}

// ---------------------------------------------------------------------------

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                          const SizeCaps& caps = {}) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw DimensionError("kron expects square operands");
  }
  const auto ra = static_cast<std::size_t>(a.rows());
  const auto rb = static_cast<std::size_t>(b.rows());
  if (rb != 0 && ra > caps.max_operator_dim / rb) {
    throw SizeCapError("kron result dimension " + std::to_string(ra) + "x" +
                       std::to_string(rb) + " exceeds cap " +
                       std::to_string(caps.max_operator_dim));
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of two column vectors.
inline ComplexVector kron_vector(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Left-to-right Kronecker product of `factors`.
inline ComplexMatrix kron_all(std::span<const ComplexMatrix> factors,
                              const SizeCaps& caps = {}) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f, caps);
  return out;
}

/// `m` tensored with itself `count` times; count 0 gives the 1x1 identity.
inline ComplexMatrix kron_power(const ComplexMatrix& m, std::size_t count,
                                const SizeCaps& caps = {}) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t i = 0; i < count; ++i) out = kron(out, m, caps);
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

struct UnitarityReport {
  bool unitary = false;
  /// max |(M M^dagger - I)_ij|
  double max_deviation = std::numeric_limits<double>::infinity();

  explicit operator bool() const { return unitary; }
};

inline UnitarityReport is_unitary(const ComplexMatrix& m,
                                  double tol = kDefaultTolerance) {
  if (m.rows() != m.cols() || m.rows() == 0) return {};
  const ComplexMatrix product = m * m.adjoint();
  const double dev = max_abs_diff(product, ComplexMatrix::Identity(m.rows(), m.cols()));
  return {std::isfinite(dev) && dev <= tol, dev};
}

// ---------------------------------------------------------------------------

/// Normalized amplitude vector over a register.
class StateVector {
 public:
  StateVector(Register reg, ComplexVector amplitudes,
              double tol = kDefaultTolerance)
      : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
    if (amps_.size() != static_cast<Eigen::Index>(reg_.dim())) {
      throw DimensionError("amplitude count " + std::to_string(amps_.size()) +
                           " does not match register dimension " +
                           std::to_string(reg_.dim()));
    }
    if (!amps_.allFinite()) throw DimensionError("non-finite amplitude");
    const double norm = amps_.norm();
    if (std::abs(norm - 1.0) > tol) {
      throw ParameterError("state is not normalized (norm " +
                           std::to_string(norm) + ")");
    }
  }

  /// Computational basis ket with one digit per wire.
  static StateVector basis(Register reg, std::span<const int> digits) {
    if (digits.size() != reg.size()) {
      throw DimensionError("one digit per wire required");
    }
    std::size_t index = 0;
    for (int digit : digits) {
      if (digit < 0 || digit >= reg.d()) throw ParameterError("digit out of range");
      index = index * static_cast<std::size_t>(reg.d()) + static_cast<std::size_t>(digit);
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(reg.dim()));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(reg), std::move(v));
  }

  static StateVector basis(Register reg, std::initializer_list<int> digits) {
    std::vector<int> v(digits);
    return basis(std::move(reg), std::span<const int>(v));
  }

  const Register& reg() const { return reg_; }
  const ComplexVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const {
    return amps_(static_cast<Eigen::Index>(i));
  }

 private:
  struct Unchecked {};
  StateVector(Unchecked, Register reg, ComplexVector amplitudes)
      : reg_(std::move(reg)), amps_(std::move(amplitudes)) {}

  friend StateVector embed_apply(const StateVector&, const ComplexMatrix&,
                                 const WireList&);
  friend StateVector tensor(const StateVector&, const StateVector&);
  friend StateVector permute(const StateVector&, const WireList&);

  Register reg_;
  ComplexVector amps_;
};

/// Applies `op` to `wires` (in the given order) with identity elsewhere. The
/// result stays normalized only if `op` is unitary.
inline StateVector embed_apply(const StateVector& state, const ComplexMatrix& op,
                               const WireList& wires) {
  const auto& reg = state.reg();
  const auto idx = reg.indices_of(wires);
  ComplexMatrix data = state.amplitudes();
  apply_on_wires(data, op, reg.d(), reg.size(), idx);
  return StateVector(StateVector::Unchecked{}, reg, ComplexVector(data.col(0)));
}

/// Tensor product; the registers are concatenated and must not share labels.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.reg().d() != b.reg().d()) throw DimensionError("mixed qudit dimensions");
  WireList wires = a.reg().wires();
  wires.insert(wires.end(), b.reg().wires().begin(), b.reg().wires().end());
  Register reg(a.reg().d(), std::move(wires));
  ComplexVector v(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    v.segment(i * b.amplitudes().size(), b.amplitudes().size()) =
        a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(StateVector::Unchecked{}, std::move(reg), std::move(v));
}

/// Same state with the register reordered to `order` (a permutation of the
/// current labels).
inline StateVector permute(const StateVector& state, const WireList& order) {
  const auto& reg = state.reg();
  if (order.size() != reg.size()) throw DimensionError("permutation must list every wire");
  const auto idx = reg.indices_of(order);
  const auto source = local_offsets(reg.d(), reg.size(), idx);
  ComplexVector v(state.amplitudes().size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = state.amplitudes()(static_cast<Eigen::Index>(source[i]));
  }
  return StateVector(StateVector::Unchecked{}, Register(reg.d(), order), std::move(v));
}

/// <a|b>
inline Complex overlap(const StateVector& a, const StateVector& b) {
  if (!(a.reg() == b.reg())) throw DimensionError("overlap of states on different registers");
  return a.amplitudes().dot(b.amplitudes());
}

// ---------------------------------------------------------------------------

/// Hermitian, unit-trace, positive semidefinite matrix over a register.
class DensityMatrix {
 public:
  DensityMatrix(Register reg, ComplexMatrix matrix, double tol = kDefaultTolerance)
      : reg_(std::move(reg)), matrix_(std::move(matrix)) {
    const auto dim = static_cast<Eigen::Index>(reg_.dim());
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
      throw DimensionError("density matrix does not match register dimension");
    }
    if (!matrix_.allFinite()) throw DimensionError("non-finite density matrix entry");
    if (max_abs_diff(matrix_, matrix_.adjoint()) > tol) {
      throw StructureError("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > tol) {
      throw StructureError("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol) {
      throw StructureError("density matrix has a negative eigenvalue");
    }
  }

  static DensityMatrix from_state(const StateVector& s) {
    return DensityMatrix(s.reg(), s.amplitudes() * s.amplitudes().adjoint());
  }

  const Register& reg() const { return reg_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  Register reg_;
  ComplexMatrix matrix_;
};

inline Register sub_register(const Register& reg, const WireList& keep) {
  reg.indices_of(keep);
  return Register(reg.d(), keep);
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, const WireList& keep) {
  if (keep.empty()) throw DimensionError("partial trace needs a nonempty keep set");
  const auto& reg = rho.reg();
  const auto idx = reg.indices_of(keep);
  return DensityMatrix(sub_register(reg, keep),
                       partial_trace(rho.matrix(), reg.d(), reg.size(), idx));
}

/// Marginal of a pure state on `keep`.
inline DensityMatrix reduced_density(const StateVector& state, const WireList& keep) {
  if (keep.empty()) throw DimensionError("partial trace needs a nonempty keep set");
  const auto& reg = state.reg();
  const auto idx = reg.indices_of(keep);
  return DensityMatrix(sub_register(reg, keep),
                       reduced_density(state.amplitudes(), reg.d(), reg.size(), idx));
}

/// <psi| rho |psi> for a pure reference state on the same register.
inline double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (!(rho.reg() == psi.reg())) throw DimensionError("fidelity across different registers");
  return std::real(psi.amplitudes().dot(rho.matrix() * psi.amplitudes()));
}

}  // namespace qclone
