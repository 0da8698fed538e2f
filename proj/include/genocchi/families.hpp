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

#ifndef GENOCCHI_FAMILIES_HPP
#define GENOCCHI_FAMILIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genocchi/bi_series.hpp"
#include "genocchi/combinatorics.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/kernels.hpp"
#include "genocchi/poly.hpp"
#include "genocchi/rational.hpp"
#include "genocchi/series.hpp"

namespace genocchi {

enum class FamilyTag {
  Type1PolyGenocchi,
  Type2PolyGenocchi,
  ApostolPolyBernoulliT1,
  ApostolPolyBernoulliT2,
  ApostolBernoulliHigher,
  FrobeniusHigher,
  ClassicalGenocchi,
  ClassicalGenocchiHigher,
  ApostolGenocchi,
  ApostolGenocchiHigher,
};

namespace detail {

struct TagName {
  FamilyTag tag;
  std::string_view name;
};

inline constexpr std::array<TagName, 10> kTagNames{{
    {FamilyTag::Type1PolyGenocchi, "type1"},
    {FamilyTag::Type2PolyGenocchi, "type2"},
    {FamilyTag::ApostolPolyBernoulliT1, "apostol-poly-bernoulli"},
    {FamilyTag::ApostolPolyBernoulliT2, "apostol-poly-bernoulli-2"},
    {FamilyTag::ApostolBernoulliHigher, "apostol-bernoulli-higher"},
    {FamilyTag::FrobeniusHigher, "frobenius"},
    {FamilyTag::ClassicalGenocchi, "classical-genocchi"},
    {FamilyTag::ClassicalGenocchiHigher, "classical-genocchi-higher"},
    {FamilyTag::ApostolGenocchi, "apostol-genocchi"},
    {FamilyTag::ApostolGenocchiHigher, "apostol-genocchi-higher"},
}};

}  // namespace detail

inline std::string_view tag_name(FamilyTag tag) {
  for (const auto& entry : detail::kTagNames) {
    if (entry.tag == tag) return entry.name;
  }
  return "unknown";
}

inline std::optional<FamilyTag> parse_tag(std::string_view name) {
  for (const auto& entry : detail::kTagNames) {
    if (entry.name == name) return entry.tag;
  }
  return std::nullopt;
}

inline std::vector<std::string> tag_names() {
  std::vector<std::string> names;
  for (const auto& entry : detail::kTagNames) names.emplace_back(entry.name);
  return names;
}

/// Which generating function, plus its discrete parameters. alpha is the
/// order (the s of the Frobenius and Bernoulli families); k only matters for
/// the poly-families; mu only for Frobenius.
struct FamilySpec {
  FamilyTag tag = FamilyTag::Type1PolyGenocchi;
  int k = 1;
  unsigned alpha = 1;
  Rational mu{-1};
  PolylogStart polylog_start = PolylogStart::from_one;

  static FamilySpec type1(int k, unsigned alpha) { return {FamilyTag::Type1PolyGenocchi, k, alpha}; }
  static FamilySpec type2(int k, unsigned alpha) { return {FamilyTag::Type2PolyGenocchi, k, alpha}; }
  static FamilySpec of(FamilyTag tag, int k = 1, unsigned alpha = 1) { return {tag, k, alpha}; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// True for families whose exponential factor is c^{xt} = e^{x t ln c}.
inline bool uses_abc(FamilyTag tag) {
  return tag == FamilyTag::Type1PolyGenocchi || tag == FamilyTag::Type2PolyGenocchi;
}

/// polys[n] = P_n(x) = n! [t^n] (kernel · e^{x t s}), s = ln c or 1.
struct FamilyExpansion {
  FamilySpec spec;
  ParamPoint params;
  std::size_t order = 0;
  std::vector<Poly> polys;

  /// Rebuilds the generating series by dividing polys[n] by n!.
  PolySeries generating_series() const {
    PolySeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s.set(n, polys[n] / factorial(n));
    return s;
  }

  friend bool operator==(const FamilyExpansion&, const FamilyExpansion&) = default;
};

namespace detail {

// num/den where den may vanish at t = 0. Both sides are built one order
// higher so that cancelling t keeps the requested order.
template <class Build>
ScalarSeries cancelling_ratio(Build build, std::size_t order) {
  auto [num, den] = build(order + 1);
  try {
    return ps_div(num, den).truncated(order);
  } catch (const ValuationError& e) {
    throw SingularDenominator(std::string("denominator vanishes at t = 0: ") + e.what());
  } catch (const DivisionByNonUnit& e) {
    throw SingularDenominator(std::string("denominator vanishes at t = 0: ") + e.what());
  }
}

// Li_k(1 - e^{-t}) or e_k(log(1+t)) over lambda e^t - 1.
inline ScalarSeries bernoulli_base(bool type2, int k, const Rational& lambda, std::size_t order,
                                   PolylogStart start = PolylogStart::from_one) {
  check_poly_order(k);
  return cancelling_ratio(
      [&](std::size_t n) {
        ScalarSeries num = type2
            ? polyexp_series(k, ps_compose(log1p_outer(n), ScalarSeries::variable(n)))
            : polylog_series(k, ScalarSeries::one(n) - ps_exp_linear(-1, n), start);
        ScalarSeries den = lambda * ps_exp_linear(1, n) - ScalarSeries::one(n);
        return std::pair{std::move(num), std::move(den)};
      },
      order);
}

// 2t / (lambda e^t + 1)
inline ScalarSeries genocchi_base(const Rational& lambda, std::size_t order) {
  if (1 + lambda == 0) throw SingularDenominator("1 + lambda = 0");
  const auto den = lambda * ps_exp_linear(1, order) + ScalarSeries::one(order);
  return ps_div(Rational(2) * ScalarSeries::variable(order), den);
}

}  // namespace detail

/// The t-part of the generating function (everything except e^{x t s}).
inline ScalarSeries family_kernel(const FamilySpec& spec, const ParamPoint& p, std::size_t order) {
  switch (spec.tag) {
    case FamilyTag::Type1PolyGenocchi:
      return kernel_type1(p, spec.k, spec.alpha, order, spec.polylog_start);
    case FamilyTag::Type2PolyGenocchi:
      return kernel_type2(p, spec.k, spec.alpha, order);
    case FamilyTag::ApostolPolyBernoulliT1:
      return ps_ipow(detail::bernoulli_base(false, spec.k, p.lambda, order, spec.polylog_start),
                     spec.alpha);
    case FamilyTag::ApostolPolyBernoulliT2:
      return ps_ipow(detail::bernoulli_base(true, spec.k, p.lambda, order), spec.alpha);
    case FamilyTag::ApostolBernoulliHigher: {
      const auto base = detail::cancelling_ratio(
          [&](std::size_t n) {
            return std::pair{ScalarSeries::variable(n),
                             p.lambda * ps_exp_linear(1, n) - ScalarSeries::one(n)};
          },
          order);
      return ps_ipow(base, spec.alpha);
    }
    case FamilyTag::FrobeniusHigher: {
      if (spec.mu == 1) throw SingularDenominator("Frobenius parameter mu = 1");
      const auto den = ps_exp_linear(1, order) - spec.mu * ScalarSeries::one(order);
      const auto base = ps_div(ScalarSeries::constant(1 - spec.mu, order), den);
      return ps_ipow(base, spec.alpha);
    }
    case FamilyTag::ClassicalGenocchi:
      return detail::genocchi_base(1, order);
    case FamilyTag::ClassicalGenocchiHigher:
      return ps_ipow(detail::genocchi_base(1, order), spec.alpha);
    case FamilyTag::ApostolGenocchi:
      return detail::genocchi_base(p.lambda, order);
    case FamilyTag::ApostolGenocchiHigher:
      return ps_ipow(detail::genocchi_base(p.lambda, order), spec.alpha);
  }
  throw std::logic_error("unknown family tag");
}

/// Rate of the exponential factor: ln c for the (a, b, c) families, 1
/// otherwise (their definitions carry no c).
inline Rational exponential_rate(const FamilySpec& spec, const ParamPoint& p) {
  return uses_abc(spec.tag) ? p.ln_c : Rational(1);
}

inline FamilyExpansion family_series(const FamilySpec& spec, const ParamPoint& p, std::size_t order) {
  const auto gf = lift(family_kernel(spec, p, order)) * ps_exp_linear_x(exponential_rate(spec, p), order);
  FamilyExpansion out{spec, p, order, {}};
  out.polys.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out.polys.push_back(gf[n] * factorial(n));
  return out;
}

inline Poly polynomial_at(const FamilySpec& spec, const ParamPoint& p, std::size_t n) {
  return family_series(spec, p, n).polys[n];
}

/// P_n(0), read off the kernel alone.
inline Rational numbers_at(const FamilySpec& spec, const ParamPoint& p, std::size_t n) {
  return family_kernel(spec, p, n)[n] * factorial(n);
}

/// P_0(0), ..., P_order(0) from one kernel expansion.
inline std::vector<Rational> numbers_up_to(const FamilySpec& spec, const ParamPoint& p,
                                           std::size_t order) {
  const auto kernel = family_kernel(spec, p, order);
  std::vector<Rational> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out.push_back(kernel[n] * factorial(n));
  return out;
}

/// (sum_i P_i(0)/i! D^i) x^n with D = d/dx. Only meaningful when the
/// exponential rate is 1 (c = e for the (a, b, c) families).
inline Poly appell_expand(const FamilySpec& spec, const ParamPoint& p, std::size_t n) {
  if (exponential_rate(spec, p) != 1) {
    throw std::invalid_argument("appell_expand needs ln c = 1");
  }
  const auto numbers = numbers_up_to(spec, p, n);
  Poly derivative = Poly::monomial(1, n);
  Poly out;
  for (std::size_t i = 0; i <= n; ++i) {
    out += derivative * (numbers[i] / factorial(i));
    derivative = derivative.derivative();
  }
  return out;
}

namespace detail {

inline Rational require_ln_ab(const ParamPoint& p) {
  const Rational l = p.ln_ab();
  if (l == 0) throw SingularDenominator("ln a + ln b = 0");
  return l;
}

}  // namespace detail

/// (z ln c + alpha ln a) / (ln a + ln b) with z a rational.
inline Rational shifted_argument(const Rational& z, unsigned alpha, const ParamPoint& p) {
  return (z * p.ln_c + static_cast<long>(alpha) * p.ln_a) / detail::require_ln_ab(p);
}

/// table[m][n] = S_n^{(m,alpha)}(x, y) as a polynomial in x, for
/// 0 <= m <= m_max and 0 <= n <= n_max.
inline std::vector<std::vector<Poly>> symmetrized_table(std::size_t m_max, std::size_t n_max,
                                                        unsigned alpha, const ParamPoint& p,
                                                        const Rational& y,
                                                        PolylogStart start = PolylogStart::from_one) {
  const Rational l = detail::require_ln_ab(p);
  const Rational shift_y = shifted_argument(y, alpha, p);
  // scaled[k][n] = G_n^{(-k, alpha)}(x; lambda, a, b, c) / (ln a + ln b)^n
  std::vector<std::vector<Poly>> scaled;
  for (std::size_t k = 0; k <= m_max; ++k) {
    FamilySpec spec = FamilySpec::type1(-static_cast<int>(k), alpha);
    spec.polylog_start = start;
    auto fam = family_series(spec, p, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) fam.polys[n] /= pow(l, static_cast<long>(n));
    scaled.push_back(std::move(fam.polys));
  }
  std::vector<std::vector<Poly>> table(m_max + 1, std::vector<Poly>(n_max + 1));
  for (std::size_t m = 0; m <= m_max; ++m) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      Poly acc;
      for (std::size_t k = 0; k <= m; ++k) {
        acc += scaled[k][n] * (Rational(binomial(m, k)) * pow(shift_y, static_cast<long>(m - k)));
      }
      table[m][n] = std::move(acc);
    }
  }
  return table;
}

/// S_n^{(m,alpha)}(x, y; lambda, a, b, c) as a polynomial in x.
inline Poly symmetrized_S(std::size_t m, std::size_t n, unsigned alpha, const ParamPoint& p,
                          const Rational& y, PolylogStart start = PolylogStart::from_one) {
  return symmetrized_table(m, n, alpha, p, y, start)[m][n];
}

/// Closed form
///   e^{Y u} e^{X t} e^{2t} / ((1 + lambda e^t)(e^{2t} - e^{2t+u} + e^u))
/// with X, Y the shifted arguments of x and y.
inline BiSeries double_gf_rhs(unsigned alpha, const ParamPoint& p, const Rational& x,
                              const Rational& y, std::size_t nt, std::size_t nu) {
  if (1 + p.lambda == 0) throw SingularDenominator("1 + lambda = 0");
  const Rational shift_x = shifted_argument(x, alpha, p);
  const Rational shift_y = shifted_argument(y, alpha, p);

  const auto t_part = ps_div(ps_exp_linear(shift_x + 2, nt),
                             ScalarSeries::one(nt) + p.lambda * ps_exp_linear(1, nt));
  const auto u_part = ps_exp_linear(shift_y, nu);

  const auto e2t = BiSeries::from_t(ps_exp_linear(2, nt), nt, nu);
  const auto eu = BiSeries::from_u(ps_exp_linear(1, nu), nt, nu);
  const auto den = e2t - bis_mul(e2t, eu) + eu;
  const auto inv_den = bis_geom(BiSeries::one(nt, nu) - den);

  return bis_mul(bis_mul(BiSeries::from_t(t_part, nt, nu), BiSeries::from_u(u_part, nt, nu)), inv_den);
}

}  // namespace genocchi

#endif  // GENOCCHI_FAMILIES_HPP
