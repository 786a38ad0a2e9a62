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

#include <sstream>

#include "qclone/cazac.hpp"
#include "test_util.hpp"

namespace qclone {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_sequence(const ChuSequence& seq, const std::vector<Complex>& expected) {
  ASSERT_EQ(seq.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_NEAR(std::abs(seq[k] - expected[k]), 0.0, 1e-14) << "k=" << k;
  }
}

class CazacDims : public ::testing::TestWithParam<int> {};

TEST(ZadoffChu, FirstEntryIsOne) {
  for (auto [d, u, q] : {std::tuple{5, 2, 3}, std::tuple{7, 3, 1}, std::tuple{8, 3, 2}}) {
    EXPECT_NEAR(std::abs(zadoff_chu(d, u, q)[0] - Complex(1.0, 0.0)), 0.0, 1e-15);
  }
}

TEST(ZadoffChu, QutritValues) {
  expect_sequence(zadoff_chu(3, 1, 0), {1.0, std::polar(1.0, -2 * kPi / 3), 1.0});
}

TEST(ZadoffChu, QuartValues) {
  expect_sequence(zadoff_chu(4, 1, 0),
                  {1.0, std::polar(1.0, -kPi / 4), -1.0, std::polar(1.0, -kPi / 4)});
}

TEST(ZadoffChu, RejectsNonCoprimeRoot) {
  EXPECT_THROW(zadoff_chu(6, 2, 0), ParameterError);
  EXPECT_THROW(zadoff_chu(1, 1, 0), ParameterError);
}

TEST(ZadoffChu, GeneralRootIsCazac) {
  const auto seq = zadoff_chu(9, 4, 2);
  for (std::size_t s = 1; s < 9; ++s) {
    EXPECT_NEAR(std::abs(periodic_autocorr(seq.values, s)), 0.0, 1e-12);
  }
}

TEST(Chu, QubitAndQutrit) {
  expect_sequence(chu(2), {1.0, Complex(0.0, -1.0)});
  expect_sequence(chu(3), {1.0, std::polar(1.0, -2 * kPi / 3), 1.0});
}

TEST_P(CazacDims, ChuIsRootOneOffsetZero) {
  const int d = GetParam();
  expect_sequence(chu(d), zadoff_chu(d, 1, 0).values);
}

TEST_P(CazacDims, UnitModulus) {
  for (const auto& v : chu(GetParam()).values) EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
}

TEST(CoeffGrid, QubitValues) {
  const auto g = coeff_grid(2);
  EXPECT_NEAR(std::abs(g(0, 0) - Complex(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g(0, 1) - Complex(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g(1, 0) - Complex(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g(1, 1) - Complex(-1, 0)), 0.0, 1e-15);
}

TEST_P(CazacDims, GridOriginAndSymmetry) {
  const int d = GetParam();
  const auto g = coeff_grid(d);
  EXPECT_EQ(g(0, 0), Complex(1.0, 0.0));
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) EXPECT_EQ(g(k, l), g(l, k));
  EXPECT_EQ(g.flattened().size(), static_cast<std::size_t>(d * d));
}

TEST(PeriodicAutocorr, ZeroShiftAndControls) {
  const auto seq = chu(6);
  EXPECT_NEAR(std::abs(periodic_autocorr(seq.values, 0) - Complex(1, 0)), 0.0, 1e-15);
  const std::vector<Complex> flat{1.0, 1.0, 1.0};
  EXPECT_NEAR(std::abs(periodic_autocorr(flat, 1) - Complex(1, 0)), 0.0, 1e-15);
  EXPECT_THROW(periodic_autocorr(flat, 3), ParameterError);
}

TEST_P(CazacDims, ChuNonzeroShiftsVanish) {
  const int d = GetParam();
  const auto seq = chu(d);
  for (int s = 1; s < d; ++s) {
    EXPECT_LE(std::abs(periodic_autocorr(seq.values, static_cast<std::size_t>(s))), 1e-10);
  }
}

TEST_P(CazacDims, Autocorr2dIsDelta) {
  const int d = GetParam();
  const auto grid = autocorr2d(d);
  EXPECT_NEAR(grid(0, 0), 1.0, 1e-14);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      if (m || n) {
        EXPECT_LE(grid(m, n), 1e-10) << m << "," << n;
      }
}

TEST(Autocorr2d, QubitGrid) {
  const auto grid = autocorr2d(2);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_LE((grid - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Autocorr2d, CsvLayout) {
  std::ostringstream os;
  write_autocorr_csv(os, autocorr2d(3));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "m,n,magnitude");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 9);
  EXPECT_EQ(os.str().back(), '\n');
}

TEST(GaussSum, ZeroShiftIsExactlyD) {
  for (int d = 2; d <= 10; ++d) EXPECT_EQ(gauss_sum(d, 0), Complex(static_cast<double>(d), 0.0));
}

TEST(GaussSum, QutritShiftOne) {
  EXPECT_LE(std::abs(gauss_sum(3, 1)), 1e-12);
}

TEST_P(CazacDims, NonzeroShiftsVanish) {
  const int d = GetParam();
  for (int m = 1; m < d; ++m) EXPECT_LE(std::abs(gauss_sum(d, m)), 1e-12) << "m=" << m;
}

TEST_P(CazacDims, FlatSpectrum) {
  const int d = GetParam();
  const auto spectrum = dft(chu(d).values);
  for (const auto& v : spectrum) EXPECT_NEAR(std::abs(v), std::sqrt(static_cast<double>(d)), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Dims, CazacDims, ::testing::Range(2, 11));

}  // namespace
}  // namespace qclone
