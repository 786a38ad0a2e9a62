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

#include <string>

#include "qclone/tensor.hpp"

namespace qclone {

/// Dimension, party count, and the party that receives the decrypted state.
struct ProtocolParams {
  int d = 2;
  int n = 1;
  /// 1-based index of the S_i wire that receives the data.
  int target_party = 1;
  SizeCaps caps{};

  ProtocolParams() = default;
  ProtocolParams(int dim, int parties, int target = 1, SizeCaps size_caps = {})
      : d(dim), n(parties), target_party(target), caps(size_caps) {
    validate();
  }

  void validate() const {
    require_dimension(d);
    if (n < 1) throw ParameterError("party count must be >= 1");
    if (target_party < 1 || target_party > n) {
      throw ParameterError("target party " + std::to_string(target_party) +
                           " outside [1, " + std::to_string(n) + "]");
    }
    try {
      checked_power(d, static_cast<std::size_t>(n) + 1, caps.max_operator_dim);
    } catch (const SizeCapError&) {
      throw SizeCapError("(d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                         "): operator dimension d^(n+1) exceeds cap " +
                         std::to_string(caps.max_operator_dim));
    }
  }

  /// Amplitude count of the full 2n+1 wire register, checked against the cap.
  std::size_t state_dim() const {
    try {
      return checked_power(d, 2 * static_cast<std::size_t>(n) + 1, caps.max_state_dim);
    } catch (const SizeCapError&) {
      throw SizeCapError("(d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                         "): state vector d^(2n+1) exceeds cap " +
                         std::to_string(caps.max_state_dim));
    }
  }

  std::string s(int i) const { return "S" + std::to_string(i); }
  std::string nw(int i) const { return "N" + std::to_string(i); }

  /// Encryption wires (A, S1..Sn).
  WireList encryption_wires() const {
    WireList w{"A"};
    for (int i = 1; i <= n; ++i) w.push_back(s(i));
    return w;
  }

  /// Decryption wires (S_t, N_t, N_j for j != t in increasing order).
  WireList decryption_wires() const {
    WireList w{s(target_party), nw(target_party)};
    for (int j = 1; j <= n; ++j) {
      if (j != target_party) w.push_back(nw(j));
    }
    return w;
  }
};

}  // namespace qclone
