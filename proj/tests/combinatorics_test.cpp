// Copyright 2026 The genocchi Authors.
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

#include <vector>

#include "genocchi/combinatorics.hpp"
#include "genocchi/series.hpp"
#include "oracle.hpp"

namespace {

using genocchi::Integer;
using genocchi::Poly;
using genocchi::Rational;
using genocchi::ScalarSeries;

TEST(Stirling, SecondKindValues) {
  EXPECT_EQ(genocchi::stirling2(0, 0), 1);
  EXPECT_EQ(genocchi::stirling2(4, 2), oracle::count_set_partitions(4, 2));
  EXPECT_EQ(genocchi::stirling2(4, 2), 7);
  EXPECT_EQ(genocchi::stirling2(3, 5), 0);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(genocchi::stirling2(n, m), oracle::count_set_partitions(n, m));
}

TEST(Stirling, FirstKindSignedValues) {
  EXPECT_EQ(genocchi::stirling1_signed(1, 1), 1);
  EXPECT_EQ(genocchi::stirling1_signed(4, 2), 11);
  EXPECT_EQ(genocchi::stirling1_signed(3, 1), 2);
  EXPECT_EQ(genocchi::stirling1_signed(4, 1), -6);
  EXPECT_EQ(genocchi::stirling1_signed(2, 3), 0);
}

// n! [t^n] (e^t-1)^m / m!  and  n! [t^n] log(1+t)^m / m!
TEST(Stirling, TablesMatchSeriesDefinitions) {
  const std::size_t nmax = 20;
  const auto em1 = genocchi::ps_exp_linear(1, nmax) - ScalarSeries::one(nmax);
  const auto log1p = genocchi::ps_compose(genocchi::log1p_outer(nmax), ScalarSeries::variable(nmax));
  for (std::size_t m = 0; m <= nmax; ++m) {
    const auto p2 = genocchi::ps_ipow(em1, m);
    const auto p1 = genocchi::ps_ipow(log1p, m);
    for (std::size_t n = 0; n <= nmax; ++n) {
      EXPECT_EQ(p2[n] * oracle::fact(n) / oracle::fact(m), Rational(genocchi::stirling2(n, m))) << n << "," << m;
      EXPECT_EQ(p1[n] * oracle::fact(n) / oracle::fact(m), Rational(genocchi::stirling1_signed(n, m))) << n << "," << m;
    }
  }
}

TEST(Stirling, LargeRowsOutsideCache) {
  // S(70, 69) = C(70, 2); s(70, 69) = -C(70, 2)
  EXPECT_EQ(genocchi::stirling2(70, 69), genocchi::binomial(70, 2));
  EXPECT_EQ(genocchi::stirling1_signed(70, 69), -genocchi::binomial(70, 2));
}

TEST(Binomial, Values) {
  EXPECT_EQ(genocchi::binomial(5, 2), 10);
  EXPECT_EQ(genocchi::binomial(3, 4), 0);
  const std::vector<std::size_t> parts{2, 1, 1};
  EXPECT_EQ(genocchi::multinomial(4, parts), 12);
  const std::vector<std::size_t> single{9};
  EXPECT_EQ(genocchi::multinomial(9, single), 1);
  const std::vector<std::size_t> bad{1, 1};
  EXPECT_THROW(genocchi::multinomial(3, bad), genocchi::PartitionError);
}

TEST(Factorials, RisingAndFalling) {
  EXPECT_EQ(genocchi::rising_poly(0), Poly(1));
  EXPECT_EQ(genocchi::falling_poly(2), Poly({0, -1, 1}));
  EXPECT_EQ(genocchi::rising_poly(3), Poly({0, 2, 3, 1}));
}

TEST(Factorials, StirlingConnectPowersAndFallingFactorials) {
  for (std::size_t n = 0; n <= 10; ++n) {
    Poly sum2;
    Poly sum1;
    for (std::size_t m = 0; m <= n; ++m) {
      sum2 += genocchi::falling_poly(m) * Rational(genocchi::stirling2(n, m));
      sum1 += Poly::monomial(Rational(genocchi::stirling1_signed(n, m)), m);
    }
    EXPECT_EQ(sum2, Poly::monomial(1, n)) << n;
    EXPECT_EQ(sum1, genocchi::falling_poly(n)) << n;
  }
}

TEST(Factorials, RisingIsFallingReflected) {
  // (x)^{(m)} = (-1)^m (-x)_m
  for (std::size_t m = 0; m <= 8; ++m) {
    const Poly reflected = genocchi::falling_poly(m).compose(Poly::affine(-1, 0)) * Rational(m % 2 ? -1 : 1);
    EXPECT_EQ(genocchi::rising_poly(m), reflected);
  }
}

}  // namespace
