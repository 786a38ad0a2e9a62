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

// Zadoff-Chu sequences and their periodic correlation properties.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

#include "qclone/tensor.hpp"

namespace qclone {

namespace detail {

// exp(-i*pi*numerator/d), with the numerator reduced mod 2d first.
inline Complex half_turn_phase(long long numerator, int d) {
  const long long period = 2LL * d;
  long long r = numerator % period;
  if (r < 0) r += period;
  const double angle = -std::numbers::pi * static_cast<double>(r) / d;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace detail

struct ChuSequence {
  int d = 0;
  /// root, coprime with d
  long long u = 1;
  long long q = 0;
  std::vector<Complex> values;

  Complex operator[](std::size_t k) const { return values[k]; }
  std::size_t size() const { return values.size(); }
};

/// zc(k) = exp(-i*pi*u*k*(k + c_f + 2q)/d), c_f = d mod 2.
inline ChuSequence zadoff_chu(int d, long long u, long long q) {
  require_dimension(d);
  if (std::gcd(u, static_cast<long long>(d)) != 1) {
    throw ParameterError("Zadoff-Chu root " + std::to_string(u) +
                         " is not coprime with length " + std::to_string(d));
  }
  const long long cf = d % 2;
  ChuSequence seq{d, u, q, {}};
  seq.values.reserve(static_cast<std::size_t>(d));
  for (long long k = 0; k < d; ++k) {
    // Reduce u mod 2d so the product cannot overflow for large roots.
    const long long uu = u % (2LL * d);
    seq.values.push_back(detail::half_turn_phase(uu * (k * (k + cf + 2 * q) % (2LL * d)), d));
  }
  return seq;
}

/// The Chu sequence c(k) = exp(-i*pi*k*(k + d mod 2)/d), i.e. root 1, offset 0.
inline ChuSequence chu(int d) { return zadoff_chu(d, 1, 0); }

/// c_kl = c(k) * c(l)
class CoeffGrid {
 public:
  explicit CoeffGrid(int d) : d_(d), c_(chu(d)) {}

  int d() const { return d_; }
  Complex operator()(int k, int l) const {
    return c_[static_cast<std::size_t>(k)] * c_[static_cast<std::size_t>(l)];
  }
  const ChuSequence& sequence() const { return c_; }

  /// Row-major flattening, length d^2.
  std::vector<Complex> flattened() const {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(d_ * d_));
    for (int k = 0; k < d_; ++k) {
      for (int l = 0; l < d_; ++l) out.push_back((*this)(k, l));
    }
    return out;
  }

 private:
  int d_;
  ChuSequence c_;
};

inline CoeffGrid coeff_grid(int d) { return CoeffGrid(d); }

/// (1/L) sum_k seq[k] * conj(seq[(k + shift) mod L])
inline Complex periodic_autocorr(std::span<const Complex> seq, std::size_t shift) {
  const std::size_t len = seq.size();
  if (len == 0) throw DimensionError("autocorrelation of an empty sequence");
  if (shift >= len) throw ParameterError("shift must be below the sequence length");
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < len; ++k) acc += seq[k] * std::conj(seq[(k + shift) % len]);
  return acc / static_cast<double>(len);
}

/// |(1/d^2) sum_{k,l} c_kl * conj(c_{k+m, l+n})| over cyclic shifts (m, n).
inline Eigen::MatrixXd autocorr2d(int d) {
  const auto grid = coeff_grid(d);
  Eigen::MatrixXd out(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          acc += grid(k, l) * std::conj(grid((k + m) % d, (l + n) % d));
        }
      }
      out(m, n) = std::abs(acc) / static_cast<double>(d * d);
    }
  }
  return out;
}

/// CSV rows "m,n,magnitude" for a 2D autocorrelation grid, with header.
inline void write_autocorr_csv(std::ostream& os, const Eigen::MatrixXd& grid) {
  os << "m,n,magnitude\n";
  char buf[64];
  for (Eigen::Index m = 0; m < grid.rows(); ++m) {
    for (Eigen::Index n = 0; n < grid.cols(); ++n) {
      std::snprintf(buf, sizeof buf, "%.17g", grid(m, n));
      os << m << ',' << n << ',' << buf << '\n';
    }
  }
}

/// sum_j exp(-i*pi*(j+m)((j+m) + d%2)/d) * exp(i*pi*j(j + d%2)/d), with j+m
/// kept as the plain integer sum.
inline Complex gauss_sum(int d, int m) {
  require_dimension(d);
  if (m < 0 || m >= d) throw ParameterError("gauss_sum shift must lie in [0, d)");
  const long long cf = d % 2;
  Complex acc{0.0, 0.0};
  for (long long j = 0; j < d; ++j) {
    const long long s = j + m;
    acc += detail::half_turn_phase(s * (s + cf), d) *
           std::conj(detail::half_turn_phase(j * (j + cf), d));
  }
  return acc;
}

/// Unnormalized DFT, X[k] = sum_j x[j] * exp(2*pi*i*j*k/L).
inline std::vector<Complex> dft(std::span<const Complex> x) {
  const auto len = static_cast<int>(x.size());
  std::vector<Complex> out(x.size());
  for (int k = 0; k < len; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < len; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long long>(j) * k) % len) / len;
      acc += x[static_cast<std::size_t>(j)] * Complex{std::cos(angle), std::sin(angle)};
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

}  // namespace qclone
