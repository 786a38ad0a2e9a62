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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "qclone/circuit.hpp"
#include "qclone/protocol.hpp"
#include "qclone/serialize.hpp"
#include "test_util.hpp"

namespace qclone {
namespace {

using testing::ket;

const std::vector<std::pair<int, int>> kSmallCases{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}};

// Dense T_kl on (S_t, N_t, N_j...): level projector times phase and Weyl
// corrections, identity on every other control block.
ComplexMatrix dense_tkl(int d, int n, int k, int l) {
  const auto grid = coeff_grid(d);
  const auto rest = static_cast<std::size_t>(n) - 1;
  const auto dim = static_cast<Eigen::Index>(ipow(d, rest + 2));
  ComplexMatrix proj = ComplexMatrix::Zero(d * d, d * d);
  proj(k * d + l, k * d + l) = 1.0;
  const ComplexMatrix fire =
      (std::conj(grid(k, l)) / std::conj(grid(0, 0))) *
      kron_power(ComplexMatrix(shift_x_power(d, k) * phase_z_power(d, -l)), rest);
  const ComplexMatrix other = ComplexMatrix::Identity(d * d, d * d) - proj;
  return kron(proj, fire) + kron(other, ComplexMatrix::Identity(dim / (d * d), dim / (d * d)));
}

TEST(QGate, QubitPhases) {
  const auto q = q_diagonal(2);
  EXPECT_NEAR(std::abs(q[0] - std::polar(1.0, -std::numbers::pi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q[1] - std::polar(1.0, std::numbers::pi / 4)), 0.0, 1e-15);
  const auto m = gate_matrix(q_gate(2), 2);
  EXPECT_NEAR(std::abs(m(0, 0) - q[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 1) - q[1]), 0.0, 1e-15);
}

TEST(QGate, UnitModulusAndScaledDft) {
  for (int d = 2; d <= 10; ++d) {
    const auto q = q_diagonal(d);
    const auto spectrum = dft(chu(d).values);
    for (int k = 0; k < d; ++k) {
      EXPECT_NEAR(std::abs(q[k]), 1.0, 1e-12);
      EXPECT_NEAR(std::abs(q[k] - spectrum[k] / std::sqrt(static_cast<double>(d))), 0.0, 1e-12);
    }
    EXPECT_TRUE(is_unitary(gate_matrix(q_gate(d), d)));
  }
}

TEST(Circuit, EmptyIsIdentity) {
  const Circuit c(Register(3, {"a", "b"}));
  EXPECT_MAT_NEAR(circuit_to_unitary(c), ComplexMatrix::Identity(9, 9), 0.0);
}

TEST(Circuit, SingleFourier) {
  Circuit c(Register(5, {"a"}));
  c.add(GateOp::fourier(0));
  EXPECT_MAT_NEAR(circuit_to_unitary(c), fourier(5), 0.0);
}

TEST(Circuit, ValidatesGates) {
  Circuit c(Register(3, {"a", "b"}));
  EXPECT_THROW(c.add(GateOp::shift_x(2, 1)), std::invalid_argument);
  EXPECT_THROW(c.add(GateOp::controlled_power(0, 0, 1)), std::invalid_argument);
  EXPECT_THROW(c.add(GateOp::diagonal_phase(0, {0.0, 0.0})), std::invalid_argument);
  EXPECT_THROW(c.add(GateOp::shift_x(1, 1).when({0}, {3})), std::invalid_argument);
  EXPECT_THROW(c.add(GateOp::diagonal_phase(0, {0.0, NAN, 0.0})), std::invalid_argument);
  c.add(GateOp::shift_x(0, -1));
  EXPECT_EQ(c.ops().back().power, 2);
}

TEST(Circuit, LevelControlledGateActsOnlyAtLevel) {
  Circuit c(Register(3, {"a", "b"}));
  c.add(GateOp::shift_x(1, 1).when({0}, {2}));
  const auto u = circuit_to_unitary(c);
  EXPECT_MAT_NEAR(ComplexMatrix(u * ket(3, {2, 0})), ComplexMatrix(ket(3, {2, 1})), 0.0);
  EXPECT_MAT_NEAR(ComplexMatrix(u * ket(3, {1, 0})), ComplexMatrix(ket(3, {1, 0})), 0.0);
}

TEST(Circuit, ApplyMatchesUnitary) {
  const auto c = build_uenc_circuit(3, 1);
  const auto psi = random_state(3, std::uint64_t{4}, {"A"});
  auto state = tensor(psi, StateVector::basis(Register(3, {"S1"}), {1}));
  const auto via_gates = apply_circuit(state, c);
  EXPECT_MAT_NEAR(ComplexMatrix(via_gates.amplitudes()),
                  ComplexMatrix(circuit_to_unitary(c) * state.amplitudes()), 1e-12);
}

TEST(VpzCircuit, MatchesDense) {
  for (auto [d, n] : kSmallCases) {
    EXPECT_MAT_NEAR(circuit_to_unitary(build_vpz_circuit(d, n)),
                    v_of_p(pauli_product(PauliAxis::Z, d, n), d), 1e-10)
        << d << "," << n;
  }
}

TEST(VpzCircuit, TallyAndSize) {
  EXPECT_EQ(build_vpz_circuit(2, 1).size(), 3u);
  for (int d = 2; d <= 5; ++d)
    for (int n = 1; n <= 3; ++n) {
      const auto c = build_vpz_circuit(d, n);
      const auto t = tally(c);
      EXPECT_EQ(t.two_qudit, 2 * n);
      EXPECT_EQ(t.one_qudit, d - 1);
      const auto q_count = std::count_if(c.ops().begin(), c.ops().end(), [](const GateOp& op) {
        return op.kind == GateKind::DiagonalPhase;
      });
      EXPECT_EQ(q_count, 1);
    }
}

TEST(VpzCircuit, UnitaryForQutritPair) {
  EXPECT_TRUE(is_unitary(circuit_to_unitary(build_vpz_circuit(3, 2)), 1e-12));
}

TEST(VpxCircuit, MatchesDense) {
  for (auto [d, n] : kSmallCases) {
    EXPECT_MAT_NEAR(circuit_to_unitary(build_vpx_circuit(d, n)),
                    v_of_p(pauli_product(PauliAxis::X, d, n), d), 1e-10)
        << d << "," << n;
  }
}

TEST(VpxCircuit, AddsFourierOnEveryWire) {
  for (int n = 1; n <= 3; ++n) {
    const auto vz = build_vpz_circuit(3, n);
    const auto vx = build_vpx_circuit(3, n);
    EXPECT_EQ(vx.size() - vz.size(), static_cast<std::size_t>(2 * (n + 1)));
    EXPECT_EQ(tally(vx).one_qudit - tally(vz).one_qudit, 2 * (n + 1));
  }
}

TEST(VpxCircuit, QubitIsHadamardConjugation) {
  const ComplexMatrix h = kron_power(fourier(2), 2);
  EXPECT_MAT_NEAR(circuit_to_unitary(build_vpx_circuit(2, 1)),
                  ComplexMatrix(h * circuit_to_unitary(build_vpz_circuit(2, 1)) * h), 1e-12);
}

TEST(UencCircuit, MatchesDense) {
  for (auto [d, n] : kSmallCases) {
    EXPECT_MAT_NEAR(circuit_to_unitary(build_uenc_circuit(d, n)), u_enc(ProtocolParams(d, n)), 1e-10);
  }
}

TEST(EncryptionTally, FourierOnEveryWireExceedsClosedFormByTwo) {
  // The closed form charges 2n Fourier gates; the circuit places F and
  // F^dagger on all n+1 wires.
  for (int d = 2; d <= 6; ++d)
    for (int n = 1; n <= 3; ++n) {
      const auto vz = tally(build_vpz_circuit(d, n));
      const auto vx = tally(build_vpx_circuit(d, n));
      const auto counts = gate_counts(d, n);
      EXPECT_EQ(vz.two_qudit + vx.two_qudit, counts.ne2q);
      EXPECT_EQ(vz.one_qudit + vx.one_qudit, counts.ne1q + 2);
    }
}

TEST(Tbar, MapsBellBasisToComputational) {
  for (int d = 2; d <= 4; ++d) {
    const auto t = build_tbar(d);
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        const ComplexVector out = t * bell_basis_state(WeylIndex(d, k, l)).amplitudes();
        EXPECT_MAT_NEAR(ComplexMatrix(out), ComplexMatrix(ket(d, {k, l})), 1e-13);
      }
  }
}

TEST(Tbar, ZeroIndexAndUnitarity) {
  const ComplexVector out = build_tbar(3) * bell_state(3).amplitudes();
  EXPECT_MAT_NEAR(ComplexMatrix(out), ComplexMatrix(ket(3, {0, 0})), 1e-14);
  EXPECT_TRUE(is_unitary(build_tbar(5)));
}

TEST(Tbar, GateFormEqualsDense) {
  for (int d = 2; d <= 7; ++d) {
    Circuit c(Register(d, {"s", "n"}));
    append_tbar(c, 0, 1);
    EXPECT_MAT_NEAR(circuit_to_unitary(c), build_tbar(d), 1e-12) << d;
    Circuit adj(Register(d, {"s", "n"}));
    append_tbar_adjoint(adj, 0, 1);
    EXPECT_MAT_NEAR(circuit_to_unitary(adj), ComplexMatrix(build_tbar(d).adjoint()), 1e-12) << d;
  }
}

TEST(CGateCircuit, EqualsDense) {
  for (int d = 2; d <= 7; ++d) {
    Circuit c(Register(d, {"s", "n"}));
    append_c_gate(c, 0, 1);
    EXPECT_MAT_NEAR(circuit_to_unitary(c), c_gate(d), 1e-12) << d;
  }
}

TEST(Tkl, ZeroIndexIsIdentity) {
  for (auto [d, n] : kSmallCases) {
    const auto u = circuit_to_unitary(build_tkl(ProtocolParams(d, n), 0, 0));
    EXPECT_MAT_NEAR(u, ComplexMatrix::Identity(u.rows(), u.cols()), 1e-14);
  }
}

TEST(Tkl, QubitOneOne) {
  const auto u = circuit_to_unitary(build_tkl(ProtocolParams(2, 2), 1, 1));
  // wires (S1, N1, N2); fires on |1 1 x>
  const ComplexMatrix xz = shift_x(2) * phase_z_power(2, -1);
  for (int s = 0; s < 2; ++s)
    for (int nn = 0; nn < 2; ++nn)
      for (int x = 0; x < 2; ++x) {
        const ComplexVector out = u * ket(2, {s, nn, x});
        ComplexVector expected = ket(2, {s, nn, x});
        if (s == 1 && nn == 1) {
          expected = -kron_vector(ket(2, {1, 1}), ComplexVector(xz * ket(2, {x})));
        }
        EXPECT_MAT_NEAR(ComplexMatrix(out), ComplexMatrix(expected), 1e-14);
      }
}

TEST(Tkl, MatchesProjectorForm) {
  for (auto [d, n] : kSmallCases) {
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        EXPECT_MAT_NEAR(circuit_to_unitary(build_tkl(ProtocolParams(d, n), k, l)),
                        dense_tkl(d, n, k, l), 1e-12);
      }
  }
}

TEST(Tkl, ProductIsBlockDiagonalAndUnitary) {
  const ProtocolParams params(3, 2);
  Circuit all(decryption_register(params));
  for (int idx = 0; idx < 9; ++idx) append_tkl(all, idx / 3, idx % 3);
  const auto u = circuit_to_unitary(all);
  EXPECT_TRUE(is_unitary(u, 1e-12));
  // No mixing between distinct (S_t, N_t) control values.
  const Eigen::Index block = u.rows() / 9;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      if (a != b) {
        EXPECT_EQ(u.block(a * block, b * block, block, block).cwiseAbs().maxCoeff(), 0.0);
      }
}

TEST(Tkl, ReorderingLeavesProductUnchanged) {
  const ProtocolParams params(3, 2);
  std::vector<int> order(9);
  std::iota(order.begin(), order.end(), 0);
  Circuit forward(decryption_register(params));
  for (int idx : order) append_tkl(forward, idx / 3, idx % 3);
  std::mt19937 rng(17);
  std::shuffle(order.begin(), order.end(), rng);
  Circuit shuffled(decryption_register(params));
  for (int idx : order) append_tkl(shuffled, idx / 3, idx % 3);
  EXPECT_MAT_NEAR(circuit_to_unitary(forward), circuit_to_unitary(shuffled), 1e-12);
}

TEST(UdecCircuit, MatchesDense) {
  for (auto [d, n] : kSmallCases) {
    const ProtocolParams params(d, n);
    EXPECT_MAT_NEAR(circuit_to_unitary(build_udec_circuit(params)), u_dec_dense(params), 1e-10)
        << d << "," << n;
  }
}

TEST(UdecCircuit, QubitHasThreeNontrivialTGates) {
  const auto c = build_udec_circuit(ProtocolParams(2, 1));
  const auto fired = std::count_if(c.ops().begin(), c.ops().end(), [](const GateOp& op) {
    return !op.control_levels.empty();
  });
  EXPECT_EQ(fired, 3);
}

TEST(UdecCircuit, EndToEndFidelity) {
  for (auto [d, n] : kSmallCases) {
    const ProtocolParams params(d, n);
    const auto report = run_protocol(params, random_state(d, std::uint64_t{9}),
                                     {9, DecryptionPath::Circuit});
    EXPECT_GE(report.decryption_fidelity, 1.0 - 1e-10);
    EXPECT_TRUE(report.decryption_pass());
  }
}

TEST(GateCounts, QutritPair) {
  const auto g = gate_counts(3, 2);
  EXPECT_EQ(g.ne1q, 8);
  EXPECT_EQ(g.ne2q, 8);
  EXPECT_EQ(g.nd1q, 56);
  EXPECT_EQ(g.nd2q, 393);
}

TEST(GateCounts, QubitClosedForm) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(gate_counts(2, n).nd2q, 9 + 8 * (2 * n - 1) * 3);
  const auto g = gate_counts(2, 2);
  EXPECT_EQ(g, (GateCounts{2, 2, 6, 8, 14, 81}));
}

TEST(GateCounts, EncryptionTwoQuditIndependentOfD) {
  for (int n = 1; n <= 10; ++n)
    for (int d = 3; d <= 10; ++d) EXPECT_EQ(gate_counts(d, n).ne2q, gate_counts(2, n).ne2q);
}

TEST(CountsTable, DefaultSweep) {
  const auto rows = counts_table();
  ASSERT_EQ(rows.size(), 27u);
  EXPECT_EQ(rows.front().d, 2);
  EXPECT_EQ(rows.back().d, 10);
  EXPECT_EQ(rows.back().n, 10);
  for (const auto& r : rows) EXPECT_GE(r.nd1q, r.ne1q);
}

TEST(CountsTable, DecryptionScalesAsNDCubed) {
  // N_D2Q / (n d^3) stays within fixed bounds over the sweep.
  for (const auto& r : counts_table()) {
    const double ratio = static_cast<double>(r.nd2q) / (r.n * std::pow(r.d, 3));
    EXPECT_GT(ratio, 2.0) << r.d << "," << r.n;
    EXPECT_LT(ratio, 16.0) << r.d << "," << r.n;
  }
}

TEST(CountsTable, Csv) {
  std::ostringstream os;
  write_counts_csv(os, counts_table(3, 3, {2}));
  EXPECT_EQ(os.str(), "d,n,NE1Q,NE2Q,ND1Q,ND2Q\n3,2,8,8,56,393\n");
}

TEST(Serialize, CircuitRoundTrip) {
  const auto c = build_udec_circuit(ProtocolParams(3, 2));
  const auto j = to_json(c);
  const auto back = circuit_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.size(), c.size());
  EXPECT_MAT_NEAR(circuit_to_unitary(back), circuit_to_unitary(c), 0.0);
  const auto& gate = j.at("gates").at(2);
  EXPECT_TRUE(gate.contains("kind"));
  EXPECT_TRUE(gate.contains("params"));
  EXPECT_TRUE(gate.contains("targets"));
  EXPECT_TRUE(gate.contains("controls"));
  EXPECT_TRUE(gate.contains("control_levels"));
}

TEST(Serialize, RejectsMalformedCircuit) {
  EXPECT_THROW(circuit_from_json(Json::parse(R"({"d": 3})")), ParameterError);
  EXPECT_THROW(circuit_from_json(Json::parse(
                   R"({"d": 2, "wires": ["a"], "gates": [{"kind": "warp", "params": {}, "targets": ["a"], "controls": [], "control_levels": []}]})")),
               std::invalid_argument);
}

}  // namespace
}  // namespace qclone
