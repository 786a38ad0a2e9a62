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

// Gate-level circuit IR, the encryption/decryption circuit builders, and the
// closed-form gate-count model.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qclone/cazac.hpp"
#include "qclone/params.hpp"
#include "qclone/weyl.hpp"

namespace qclone {

enum class GateKind {
  ShiftX,           // X^power
  PhaseZ,           // Z^power
  Fourier,          // F
  FourierDagger,    // F^dagger
  DiagonalPhase,    // diag(exp(i*phases[k]))
  ControlledPower,  // C(X^power): |j>|k> -> |j>|k + power*j>
  Swap,             // SWAP on two targets
  ScalarPhase,      // exp(i*phases[0]), no targets
};

inline std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::ShiftX: return "shift_x";
    case GateKind::PhaseZ: return "phase_z";
    case GateKind::Fourier: return "fourier";
    case GateKind::FourierDagger: return "fourier_dagger";
    case GateKind::DiagonalPhase: return "diagonal_phase";
    case GateKind::ControlledPower: return "controlled_power";
    case GateKind::Swap: return "swap";
    case GateKind::ScalarPhase: return "scalar_phase";
  }
  return "unknown";
}

inline GateKind gate_kind_from_string(std::string_view name) {
  for (auto kind : {GateKind::ShiftX, GateKind::PhaseZ, GateKind::Fourier,
                    GateKind::FourierDagger, GateKind::DiagonalPhase,
                    GateKind::ControlledPower, GateKind::Swap, GateKind::ScalarPhase}) {
    if (to_string(kind) == name) return kind;
  }
  throw ParameterError("unknown gate kind '" + std::string(name) + "'");
}

/// One gate. Wires are indices into the owning circuit's register.
///
/// A non-empty `control_levels` makes the gate level-controlled: it fires
/// only when every control wire sits at its listed level, and acts as the
/// identity otherwise. ControlledPower takes one control wire and no levels.
struct GateOp {
  GateKind kind = GateKind::ShiftX;
  int power = 0;
  std::vector<double> phases;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> controls;
  std::vector<int> control_levels;

  static GateOp shift_x(std::size_t target, int power) {
    return {GateKind::ShiftX, power, {}, {target}, {}, {}};
  }
  static GateOp phase_z(std::size_t target, int power) {
    return {GateKind::PhaseZ, power, {}, {target}, {}, {}};
  }
  static GateOp fourier(std::size_t target) {
    return {GateKind::Fourier, 0, {}, {target}, {}, {}};
  }
  static GateOp fourier_dagger(std::size_t target) {
    return {GateKind::FourierDagger, 0, {}, {target}, {}, {}};
  }
  static GateOp diagonal_phase(std::size_t target, std::vector<double> phases) {
    return {GateKind::DiagonalPhase, 0, std::move(phases), {target}, {}, {}};
  }
  static GateOp controlled_power(std::size_t control, std::size_t target, int power) {
    return {GateKind::ControlledPower, power, {}, {target}, {control}, {}};
  }
  static GateOp swap(std::size_t a, std::size_t b) {
    return {GateKind::Swap, 0, {}, {a, b}, {}, {}};
  }
  static GateOp scalar_phase(double angle) {
    return {GateKind::ScalarPhase, 0, {angle}, {}, {}, {}};
  }

  /// Same gate, firing only when `controls` sit at `levels`.
  GateOp when(std::vector<std::size_t> ctrl, std::vector<int> levels) const {
    GateOp out = *this;
    out.controls = std::move(ctrl);
    out.control_levels = std::move(levels);
    return out;
  }

  std::vector<std::size_t> wires() const {
    std::vector<std::size_t> w = controls;
    w.insert(w.end(), targets.begin(), targets.end());
    return w;
  }
};

/// Matrix of the gate on its own wires, ordered controls first then targets.
inline ComplexMatrix gate_matrix(const GateOp& op, int d) {
  ComplexMatrix target;
  switch (op.kind) {
    case GateKind::ShiftX: target = shift_x_power(d, op.power); break;
    case GateKind::PhaseZ: target = phase_z_power(d, op.power); break;
    case GateKind::Fourier: target = fourier(d); break;
    case GateKind::FourierDagger: target = fourier(d).adjoint(); break;
    case GateKind::DiagonalPhase: {
      target = ComplexMatrix::Zero(d, d);
      for (int k = 0; k < d; ++k) target(k, k) = std::polar(1.0, op.phases[static_cast<std::size_t>(k)]);
      break;
    }
    case GateKind::ControlledPower: return controlled_power(shift_x_power(d, op.power), d);
    case GateKind::Swap: target = swap_gate(d); break;
    case GateKind::ScalarPhase:
      target = ComplexMatrix::Constant(1, 1, std::polar(1.0, op.phases[0]));
      break;
  }
  if (op.controls.empty()) return target;
  const auto block = static_cast<Eigen::Index>(target.rows());
  const auto total = static_cast<Eigen::Index>(ipow(d, op.controls.size())) * block;
  ComplexMatrix out = ComplexMatrix::Identity(total, total);
  Eigen::Index pattern = 0;
  for (int level : op.control_levels) pattern = pattern * d + level;
  out.block(pattern * block, pattern * block, block, block) = target;
  return out;
}

/// Ordered gate list over a register.
class Circuit {
 public:
  explicit Circuit(Register reg) : reg_(std::move(reg)) {}

  const Register& reg() const { return reg_; }
  int d() const { return reg_.d(); }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  /// Validates and appends; powers are reduced mod d.
  Circuit& add(GateOp op) {
    const int d = reg_.d();
    auto require = [](bool ok, const std::string& why) {
      if (!ok) throw DimensionError("invalid gate: " + why);
    };
    const auto wires = op.wires();
    check_wire_indices(reg_.size(), wires);
    op.power = mod(op.power, d);
    for (double p : op.phases) require(std::isfinite(p), "non-finite phase");
    switch (op.kind) {
      case GateKind::ScalarPhase:
        require(op.targets.empty() && op.phases.size() == 1, "scalar phase takes one angle, no targets");
        break;
      case GateKind::Swap:
        require(op.targets.size() == 2, "swap takes two targets");
        break;
      case GateKind::ControlledPower:
        require(op.targets.size() == 1 && op.controls.size() == 1 && op.control_levels.empty(),
                "controlled power takes one control and one target");
        break;
      case GateKind::DiagonalPhase:
        require(op.targets.size() == 1 && op.phases.size() == static_cast<std::size_t>(d),
                "diagonal phase takes one target and d angles");
        break;
      default:
        require(op.targets.size() == 1, "single-qudit gate takes one target");
    }
    if (op.kind != GateKind::ControlledPower) {
      require(op.control_levels.size() == op.controls.size(), "one level per control");
      for (int level : op.control_levels) require(level >= 0 && level < d, "control level out of range");
    }
    ops_.push_back(std::move(op));
    return *this;
  }

  Circuit& append(const Circuit& other) {
    if (!(other.reg_ == reg_)) throw DimensionError("appending circuit on a different register");
    for (const auto& op : other.ops_) ops_.push_back(op);
    return *this;
  }

 private:
  Register reg_;
  std::vector<GateOp> ops_;
};

/// Ordered product of the embedded gate matrices.
inline ComplexMatrix circuit_to_unitary(const Circuit& c, const SizeCaps& caps = {}) {
  const auto& reg = c.reg();
  const auto dim = checked_power(reg.d(), reg.size(), caps.max_operator_dim);
  ComplexMatrix u = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (const auto& op : c.ops()) {
    apply_on_wires(u, gate_matrix(op, reg.d()), reg.d(), reg.size(), op.wires());
  }
  return u;
}

/// Runs the circuit gate by gate on `wires` of `state`; circuit wire i maps to
/// wires[i]. An empty `wires` maps by the circuit's own labels.
inline StateVector apply_circuit(StateVector state, const Circuit& c, WireList wires = {}) {
  if (wires.empty()) wires = c.reg().wires();
  if (wires.size() != c.reg().size()) throw DimensionError("wire map must cover the circuit");
  for (const auto& op : c.ops()) {
    WireList mapped;
    for (auto w : op.wires()) mapped.push_back(wires[w]);
    state = embed_apply(state, gate_matrix(op, c.d()), mapped);
  }
  return state;
}

// ---------------------------------------------------------------------------
// Encryption circuits.

/// Diagonal of Q: q_k = d^(-1/2) sum_j c(j) omega^(jk). Unit modulus by the
/// flat spectrum of the Chu sequence.
inline std::vector<Complex> q_diagonal(int d) {
  const auto c = chu(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> q(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < d; ++j) acc += c[static_cast<std::size_t>(j)] * omega_power(d, static_cast<long long>(j) * k);
    q[static_cast<std::size_t>(k)] = scale * acc;
  }
  return q;
}

/// Q as a diagonal-phase gate storing absolute phases arg(q_k).
inline GateOp q_gate(int d, std::size_t target = 0) {
  std::vector<double> phases;
  for (auto q : q_diagonal(d)) phases.push_back(std::arg(q));
  return GateOp::diagonal_phase(target, std::move(phases));
}

inline Register encryption_register(int d, int n, const SizeCaps& caps = {}) {
  ProtocolParams params(d, n, 1, caps);
  return Register(d, params.encryption_wires());
}

/// V(P_Z): C(X_d) ladder A -> S1 -> ... -> Sn, Q on Sn, inverse ladder.
inline Circuit build_vpz_circuit(int d, int n, const SizeCaps& caps = {}) {
  Circuit c(encryption_register(d, n, caps));
  const auto last = static_cast<std::size_t>(n);
  for (std::size_t w = 0; w < last; ++w) c.add(GateOp::controlled_power(w, w + 1, 1));
  c.add(q_gate(d, last));
  for (std::size_t w = last; w-- > 0;) c.add(GateOp::controlled_power(w, w + 1, -1));
  return c;
}

/// V(P_X) = F^dagger V(P_Z) F with F on every wire.
inline Circuit build_vpx_circuit(int d, int n, const SizeCaps& caps = {}) {
  Circuit c(encryption_register(d, n, caps));
  const auto wires = static_cast<std::size_t>(n) + 1;
  for (std::size_t w = 0; w < wires; ++w) c.add(GateOp::fourier(w));
  c.append(build_vpz_circuit(d, n, caps));
  for (std::size_t w = 0; w < wires; ++w) c.add(GateOp::fourier_dagger(w));
  return c;
}

/// U_enc = V(P_X) V(P_Z), so V(P_Z) runs first.
inline Circuit build_uenc_circuit(int d, int n, const SizeCaps& caps = {}) {
  Circuit c = build_vpz_circuit(d, n, caps);
  c.append(build_vpx_circuit(d, n, caps));
  return c;
}

// ---------------------------------------------------------------------------
// Decryption circuits.

/// T-bar = sum_{k,l} |k>|l> <Phi_kl|, mapping the Bell basis onto the
/// computational basis.
inline ComplexMatrix build_tbar(int d) {
  ComplexMatrix t = ComplexMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      const auto phi = bell_basis_state(WeylIndex(d, k, l)).amplitudes();
      t.row(k * d + l) = phi.adjoint();
    }
  }
  return t;
}

/// T-bar as gates on (s, nw): C(X^-1) controlled by nw onto s, then F^dagger
/// on nw. Equal to build_tbar(d) with no extra phase.
inline void append_tbar(Circuit& c, std::size_t s, std::size_t nw) {
  c.add(GateOp::controlled_power(nw, s, -1));
  c.add(GateOp::fourier_dagger(nw));
}

inline void append_tbar_adjoint(Circuit& c, std::size_t s, std::size_t nw) {
  c.add(GateOp::fourier(nw));
  c.add(GateOp::controlled_power(nw, s, 1));
}

/// C = (sum_c X^(2c) (x) |c><c|) (I (x) F^2) on (s, nw): F^2 on nw first,
/// then the nw-controlled X^2 power onto s.
inline void append_c_gate(Circuit& c, std::size_t s, std::size_t nw) {
  c.add(GateOp::fourier(nw));
  c.add(GateOp::fourier(nw));
  c.add(GateOp::controlled_power(nw, s, 2));
}

inline Register decryption_register(const ProtocolParams& params) {
  params.validate();
  return Register(params.d, params.decryption_wires());
}

/// Ops of T_kl on the decryption register: with S_t at level k and N_t at
/// level l, a phase conj(c_kl)/conj(c_00) and X^k Z^-l on every other N_j.
inline void append_tkl(Circuit& c, int k, int l) {
  const int d = c.d();
  const auto grid = coeff_grid(d);
  const double angle = std::arg(std::conj(grid(k, l)) / std::conj(grid(0, 0)));
  const std::vector<std::size_t> ctrl{0, 1};
  const std::vector<int> levels{k, l};
  c.add(GateOp::scalar_phase(angle).when(ctrl, levels));
  for (std::size_t w = 2; w < c.reg().size(); ++w) {
    c.add(GateOp::phase_z(w, -l).when(ctrl, levels));
    c.add(GateOp::shift_x(w, k).when(ctrl, levels));
  }
}

inline Circuit build_tkl(const ProtocolParams& params, int k, int l) {
  if (k < 0 || k >= params.d || l < 0 || l >= params.d) {
    throw ParameterError("T gate indices must lie in [0, d)");
  }
  Circuit c(decryption_register(params));
  append_tkl(c, k, l);
  return c;
}

/// Decryption circuit: T-bar, T_1 .. T_{d^2-1}, T-bar^dagger, the c_00 scalar,
/// then C and SWAP on (S_t, N_t).
inline Circuit build_udec_circuit(const ProtocolParams& params) {
  Circuit c(decryption_register(params));
  const int d = params.d;
  append_tbar(c, 0, 1);
  for (int index = 1; index < d * d; ++index) append_tkl(c, index / d, index % d);
  append_tbar_adjoint(c, 0, 1);
  c.add(GateOp::scalar_phase(std::arg(coeff_grid(d)(0, 0))));
  append_c_gate(c, 0, 1);
  c.add(GateOp::swap(0, 1));
  return c;
}

// ---------------------------------------------------------------------------
// Gate counting.

struct GateTally {
  std::int64_t one_qudit = 0;
  std::int64_t two_qudit = 0;
  /// gates with level controls, counted whole
  std::int64_t level_controlled = 0;
};

/// Diagonal phases count as d-1 single-qudit gates (the k=0 rotation is
/// absorbed); uncontrolled scalar phases count as nothing.
inline GateTally tally(const Circuit& c) {
  GateTally t;
  for (const auto& op : c.ops()) {
    if (!op.control_levels.empty()) {
      ++t.level_controlled;
      continue;
    }
    switch (op.kind) {
      case GateKind::DiagonalPhase: t.one_qudit += c.d() - 1; break;
      case GateKind::ScalarPhase: break;
      case GateKind::ControlledPower:
      case GateKind::Swap: ++t.two_qudit; break;
      default: ++t.one_qudit;
    }
  }
  return t;
}

struct GateCounts {
  int d = 0;
  int n = 0;
  std::int64_t ne1q = 0;
  std::int64_t ne2q = 0;
  std::int64_t nd1q = 0;
  std::int64_t nd2q = 0;

  bool operator==(const GateCounts&) const = default;
};

inline GateCounts gate_counts(int d, int n) {
  require_dimension(d);
  if (n < 1) throw ParameterError("party count must be >= 1");
  const std::int64_t dd = d;
  const std::int64_t nn = n;
  GateCounts g{d, n, 0, 0, 0, 0};
  g.ne2q = 4 * nn;
  g.ne1q = 2 * nn + 2 * (dd - 1);
  g.nd1q = 2 + (2 * nn - 1) * dd * dd * (dd - 1);
  g.nd2q = 9 + 8 * (2 * nn - 1) * (dd * dd * dd - dd * dd - dd + 1);
  return g;
}

/// One row per (d, n), d ascending in [d_min, d_max], then n in set order.
inline std::vector<GateCounts> counts_table(int d_min = 2, int d_max = 10,
                                            const std::vector<int>& n_set = {2, 5, 10}) {
  std::vector<GateCounts> rows;
  for (int d = d_min; d <= d_max; ++d) {
    for (int n : n_set) rows.push_back(gate_counts(d, n));
  }
  return rows;
}

inline void write_counts_csv(std::ostream& os, const std::vector<GateCounts>& rows) {
  os << "d,n,NE1Q,NE2Q,ND1Q,ND2Q\n";
  for (const auto& r : rows) {
    os << r.d << ',' << r.n << ',' << r.ne1q << ',' << r.ne2q << ',' << r.nd1q << ','
       << r.nd2q << '\n';
  }
}

}  // namespace qclone
