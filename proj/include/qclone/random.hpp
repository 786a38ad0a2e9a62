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

// Seeded random states and operators.

#include <cstdint>
#include <random>

#include "qclone/tensor.hpp"

namespace qclone {

using Rng = std::mt19937_64;

/// d x d matrix with independent standard complex-normal entries.
inline ComplexMatrix random_operator(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex{re, im};
    }
  }
  return m;
}

/// Complex-normal vector scaled to unit length.
inline ComplexVector random_unit_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex{re, im};
  }
  return v / v.norm();
}

inline StateVector random_state(int d, Rng& rng, WireList wires = {"A"}) {
  Register reg(d, std::move(wires));
  auto v = random_unit_vector(reg.dim(), rng);
  return StateVector(std::move(reg), std::move(v));
}

inline StateVector random_state(int d, std::uint64_t seed, WireList wires = {"A"}) {
  Rng rng(seed);
  return random_state(d, rng, std::move(wires));
}

}  // namespace qclone
