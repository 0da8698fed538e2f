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

#include <random>
#include <vector>

#include "genocchi/combinatorics.hpp"
#include "genocchi/families.hpp"
#include "oracle.hpp"

namespace {

using genocchi::FamilySpec;
using genocchi::FamilyTag;
using genocchi::make_rational;
using genocchi::ParamPoint;
using genocchi::Poly;
using genocchi::Rational;

// P_n(x) = sum_i C(n,i) g_i x^{n-i} with g_i = i! [t^i] kernel, the kernel
// coefficients coming from schoolbook long division.
std::vector<Poly> appell_from_kernel(const std::vector<Rational>& kernel) {
  std::vector<Poly> out;
  for (std::size_t n = 0; n < kernel.size(); ++n) {
    Poly p;
    for (std::size_t i = 0; i <= n; ++i) {
      const Rational g = kernel[i] * oracle::fact(i);
      p += Poly::monomial(g * oracle::fact(n) / (oracle::fact(i) * oracle::fact(n - i)), n - i);
    }
    out.push_back(p);
  }
  return out;
}

std::vector<Rational> classical_genocchi_kernel(std::size_t order) {
  std::vector<Rational> num(order + 1);
  num[1] = 2;
  auto den = oracle::exp_coeffs(1, order);
  den[0] += 1;
  return oracle::long_divide(num, den);
}

TEST(FamilySeries, ClassicalGenocchi) {
  const auto fam = genocchi::family_series(FamilySpec::of(FamilyTag::ClassicalGenocchi), ParamPoint::classical(), 12);
  EXPECT_EQ(fam.polys, appell_from_kernel(classical_genocchi_kernel(12)));
  EXPECT_EQ(fam.polys[0], Poly());
  EXPECT_EQ(fam.polys[1], Poly(1));
  EXPECT_EQ(fam.polys[2], Poly({-1, 2}));
}

TEST(FamilySeries, FrobeniusGivesEulerPolynomials) {
  FamilySpec spec = FamilySpec::of(FamilyTag::FrobeniusHigher, 1, 1);
  spec.mu = -1;
  const auto fam = genocchi::family_series(spec, ParamPoint::classical(), 8);
  std::vector<Rational> num(9);
  num[0] = 2;
  auto den = oracle::exp_coeffs(1, 8);
  den[0] += 1;
  EXPECT_EQ(fam.polys, appell_from_kernel(oracle::long_divide(num, den)));
  EXPECT_EQ(fam.polys[0], Poly(1));
  EXPECT_EQ(fam.polys[1], Poly({make_rational(-1, 2), 1}));
}

TEST(FamilySeries, Type1DilogAtClassicalPoint) {
  const auto fam = genocchi::family_series(FamilySpec::type1(2, 1), ParamPoint::classical(), 6);
  EXPECT_EQ(fam.polys[1](0), 1);
  EXPECT_EQ(fam.polys[2](0), -2);
}

TEST(FamilySeries, ErrorPaths) {
  EXPECT_THROW(genocchi::family_series(FamilySpec::type1(2, 1), {-1, 0, 1, 1}, 4), genocchi::SingularDenominator);
  EXPECT_THROW(genocchi::family_series(FamilySpec::of(FamilyTag::ApostolGenocchi), {-1, 0, 1, 1}, 4),
               genocchi::SingularDenominator);
  FamilySpec frob = FamilySpec::of(FamilyTag::FrobeniusHigher);
  frob.mu = 1;
  EXPECT_THROW(genocchi::family_series(frob, ParamPoint::classical(), 4), genocchi::SingularDenominator);
  FamilySpec bern = FamilySpec::of(FamilyTag::ApostolPolyBernoulliT1, 0, 1);
  bern.polylog_start = genocchi::PolylogStart::from_zero;
  EXPECT_THROW(genocchi::family_series(bern, ParamPoint::classical(), 4), genocchi::SingularDenominator);
  EXPECT_THROW(genocchi::family_series(FamilySpec::type1(17, 1), ParamPoint::classical(), 4), genocchi::RangeError);
}

TEST(FamilySeries, BernoulliAtLambdaOneCancelsValuation) {
  // t/(e^t - 1) e^{xt}: Bernoulli polynomials B_0 = 1, B_1 = x - 1/2, B_2 = x^2 - x + 1/6.
  const auto fam = genocchi::family_series(FamilySpec::of(FamilyTag::ApostolBernoulliHigher), ParamPoint::classical(), 6);
  EXPECT_EQ(fam.polys[0], Poly(1));
  EXPECT_EQ(fam.polys[1], Poly({make_rational(-1, 2), 1}));
  EXPECT_EQ(fam.polys[2], Poly({make_rational(1, 6), -1, 1}));
  // k = 1 poly-Bernoulli is the ordinary Bernoulli family.
  const auto poly1 = genocchi::family_series(FamilySpec::of(FamilyTag::ApostolPolyBernoulliT1, 1, 2), ParamPoint::classical(), 6);
  const auto ber2 = genocchi::family_series(FamilySpec::of(FamilyTag::ApostolBernoulliHigher, 1, 2), ParamPoint::classical(), 6);
  EXPECT_EQ(poly1.polys, ber2.polys);
}

TEST(Numbers, ClassicalGenocchiNumbers) {
  const auto spec = FamilySpec::of(FamilyTag::ClassicalGenocchi);
  const std::vector<Rational> expected{0, 1, -1, 0, 1, 0, -3};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(genocchi::numbers_at(spec, ParamPoint::classical(), n), expected[n]) << n;
  }
  const auto kernel = classical_genocchi_kernel(10);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(genocchi::numbers_at(spec, ParamPoint::classical(), n), kernel[n] * oracle::fact(n));
}

TEST(Numbers, GenocchiTypeVanishAtZero) {
  const ParamPoint p{make_rational(1, 2), make_rational(1, 3), 2, 5};
  for (int k : {-2, 0, 1, 3}) {
    EXPECT_EQ(genocchi::numbers_at(FamilySpec::type1(k, 2), p, 0), 0);
    EXPECT_EQ(genocchi::numbers_at(FamilySpec::type2(k, 1), p, 0), 0);
  }
}

TEST(AppellExpand, WorkedExampleAndCrossCheck) {
  const ParamPoint p{make_rational(1, 2), make_rational(1, 3), make_rational(2, 3), 1};
  const auto spec = FamilySpec::type1(2, 2);
  std::vector<Rational> g;
  for (std::size_t i = 0; i <= 3; ++i) g.push_back(genocchi::numbers_at(spec, p, i));
  EXPECT_EQ(genocchi::appell_expand(spec, p, 3), Poly({g[3], 3 * g[2], 3 * g[1], g[0]}));
  EXPECT_EQ(genocchi::appell_expand(spec, p, 0), Poly(g[0]));

  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> kd(-2, 3);
  std::uniform_int_distribution<int> ad(0, 3);
  for (int trial = 0; trial < 8; ++trial) {
    ParamPoint q{oracle::random_rational(rng, 3), oracle::random_rational(rng, 3), oracle::random_rational(rng, 3), 1};
    if (q.lambda == -1) q.lambda = 2;
    const FamilySpec s = trial % 2 ? FamilySpec::type1(kd(rng), ad(rng)) : FamilySpec::type2(kd(rng), ad(rng));
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(genocchi::appell_expand(s, q, n), genocchi::polynomial_at(s, q, n));
  }
  EXPECT_THROW(genocchi::appell_expand(spec, ParamPoint{1, 0, 1, 2}, 3), std::invalid_argument);
}

TEST(Reductions, Type1ReducesToApostolAndClassicalGenocchi) {
  for (const Rational& lambda : {Rational(1), Rational(0), make_rational(2, 3), Rational(-3)}) {
    const ParamPoint p{lambda, 0, 1, 1};
    for (unsigned alpha = 0; alpha <= 3; ++alpha) {
      const auto type1 = genocchi::family_series(FamilySpec::type1(1, alpha), p, 12);
      const auto apostol = genocchi::family_series(FamilySpec::of(FamilyTag::ApostolGenocchiHigher, 1, alpha), p, 12);
      EXPECT_EQ(type1.polys, apostol.polys);
      if (lambda == 1) {
        const auto classical = genocchi::family_series(FamilySpec::of(FamilyTag::ClassicalGenocchiHigher, 1, alpha), p, 12);
        EXPECT_EQ(type1.polys, classical.polys);
      }
    }
  }
}

TEST(FamilyProperties, DegreeValuationAppellAndReconstruction) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    ParamPoint p{oracle::random_rational(rng, 3), oracle::random_rational(rng, 3), oracle::random_rational(rng, 3),
                 oracle::random_rational(rng, 3)};
    if (p.lambda == -1) p.lambda = 0;
    if (p.ln_ab() == 0) p.ln_b += 1;
    const int k = trial % 5 - 2 + (trial % 5 >= 2 ? 1 : 0);  // -2, -1, 1, 2, 3
    const unsigned alpha = static_cast<unsigned>(trial % 4);
    for (const FamilySpec& spec : {FamilySpec::type1(k, alpha), FamilySpec::type2(k, alpha)}) {
      const auto fam = genocchi::family_series(spec, p, 10);
      for (std::size_t n = 0; n <= 10; ++n) EXPECT_LE(fam.polys[n].degree(), static_cast<int>(n));
      EXPECT_EQ(genocchi::family_kernel(spec, p, 10).valuation(), alpha == 0 ? std::optional<std::size_t>(0) : std::optional<std::size_t>(alpha));
      for (std::size_t n = 0; n < 10; ++n) {
        EXPECT_EQ(fam.polys[n + 1].derivative(), fam.polys[n] * (Rational(static_cast<long>(n + 1)) * p.ln_c));
      }
      const auto gf = genocchi::lift(genocchi::family_kernel(spec, p, 10)) * genocchi::ps_exp_linear_x(p.ln_c, 10);
      EXPECT_EQ(fam.generating_series(), gf);
    }
  }
}

TEST(FamilyProperties, AlphaZeroIsPurePower) {
  const ParamPoint p{make_rational(1, 2), 1, 2, make_rational(3, 2)};
  const auto fam = genocchi::family_series(FamilySpec::type1(2, 0), p, 6);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(fam.polys[n], Poly::monomial(genocchi::pow(p.ln_c, static_cast<long>(n)), n));
}

TEST(Symmetrized, BoundaryCases) {
  const ParamPoint p{make_rational(1, 3), make_rational(1, 2), 1, 2};
  const Rational l = p.ln_ab();
  for (std::size_t n = 0; n <= 5; ++n) {
    const Poly expected = genocchi::polynomial_at(FamilySpec::type1(0, 2), p, n) / genocchi::pow(l, static_cast<long>(n));
    EXPECT_EQ(genocchi::symmetrized_S(0, n, 2, p, make_rational(1, 5)), expected);
  }
  for (std::size_t m = 0; m <= 4; ++m) {
    EXPECT_TRUE(genocchi::symmetrized_S(m, 0, 1, p, 3).is_constant());
  }
  EXPECT_THROW(genocchi::symmetrized_S(1, 1, 1, ParamPoint{1, 1, -1, 1}, 0), genocchi::SingularDenominator);
}

TEST(Symmetrized, TableMatchesDirectDoubleSum) {
  const ParamPoint p{2, make_rational(1, 2), make_rational(1, 3), 2};
  const Rational y = make_rational(-1, 2);
  const auto table = genocchi::symmetrized_table(4, 4, 1, p, y);
  const Rational l = p.ln_ab();
  const Rational shift_y = (y * p.ln_c + p.ln_a) / l;
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      Poly direct;
      for (std::size_t k = 0; k <= m; ++k) {
        direct += genocchi::polynomial_at(FamilySpec::type1(-static_cast<int>(k), 1), p, n) *
                  (Rational(genocchi::binomial(m, k)) * genocchi::pow(shift_y, static_cast<long>(m - k)) /
                   genocchi::pow(l, static_cast<long>(n)));
      }
      EXPECT_EQ(table[m][n], direct) << m << "," << n;
      EXPECT_EQ(genocchi::symmetrized_S(m, n, 1, p, y), direct);
    }
  }
}

TEST(DoubleGf, LowOrderEntries) {
  const ParamPoint p{make_rational(1, 2), make_rational(1, 3), 1, 2};
  const auto rhs = genocchi::double_gf_rhs(1, p, make_rational(1, 4), 2, 4, 4);
  EXPECT_EQ(rhs.at(0, 0), 1 / (1 + p.lambda));

  // All logs 1, lambda 1: at t = 0 the closed form is e^{Yu}/2.
  const ParamPoint ones{1, 1, 1, 1};
  const Rational y = make_rational(1, 3);
  const auto r1 = genocchi::double_gf_rhs(2, ones, 0, y, 3, 3);
  EXPECT_EQ(r1.at(0, 1), (y + 2) / 2 / 2);

  // u = 0 row: e^{(X+2)t} / (1 + lambda e^t).
  const Rational x = make_rational(1, 4);
  const Rational shift_x = (x * p.ln_c + p.ln_a) / p.ln_ab();
  const auto den = oracle::add(std::vector<Rational>{1, 0, 0, 0, 0}, oracle::scale(oracle::exp_coeffs(1, 4), p.lambda));
  const auto row = oracle::long_divide(oracle::exp_coeffs(shift_x + 2, 4), den);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(rhs.at(n, 0), row[n]);
}

}  // namespace
