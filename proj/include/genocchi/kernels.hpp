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

#ifndef GENOCCHI_KERNELS_HPP
#define GENOCCHI_KERNELS_HPP

#include <cstddef>
#include <cstdlib>
#include <string>

#include "genocchi/errors.hpp"
#include "genocchi/rational.hpp"
#include "genocchi/series.hpp"

namespace genocchi {

/// Sample point for the family parameters. The bases a, b, c enter every
/// generating function only through their logarithms, so rational stand-ins
/// for ln a, ln b, ln c keep every identity exact.
struct ParamPoint {
  Rational lambda{1};
  Rational ln_a{0};
  Rational ln_b{1};
  Rational ln_c{1};

  /// ln a + ln b
  Rational ln_ab() const { return ln_a + ln_b; }

  /// lambda = 1, a = 1, b = c = e.
  static ParamPoint classical() { return {}; }

  /// Same lambda, with a = 1 and b = c = e.
  ParamPoint base() const { return {lambda, 0, 1, 1}; }

  ParamPoint with_ln_c(const Rational& lc) const { return {lambda, ln_a, ln_b, lc}; }

  std::string to_string() const {
    return "(lambda=" + genocchi::to_string(lambda) + ", ln_a=" + genocchi::to_string(ln_a) +
           ", ln_b=" + genocchi::to_string(ln_b) + ", ln_c=" + genocchi::to_string(ln_c) + ")";
  }

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Where the polylogarithm sum starts. from_one is the standard definition;
/// from_zero adds the m = 0 term 0^{-k}, which is 1 for k = 0 and 0 for
/// k < 0 (undefined for k > 0).
enum class PolylogStart { from_one, from_zero };

inline constexpr int kMaxPolyOrder = 16;

inline void check_poly_order(int k) {
  if (std::abs(k) > kMaxPolyOrder) {
    throw RangeError("polylog/polyexponential order " + std::to_string(k) + " outside [-16, 16]");
  }
}

/// 1/m^k for m >= 1, k of either sign.
inline Rational inverse_power(std::size_t m, int k) {
  return pow(Rational(static_cast<long>(m)), -static_cast<long>(k));
}

/// Li_k as an outer series: coefficient of w^m is 1/m^k.
inline ScalarSeries polylog_outer(int k, std::size_t order,
                                  PolylogStart start = PolylogStart::from_one) {
  check_poly_order(k);
  ScalarSeries s(order);
  for (std::size_t m = 1; m <= order; ++m) s.set(m, inverse_power(m, k));
  if (start == PolylogStart::from_zero) {
    if (k > 0) throw RangeError("polylog sum from m = 0 is undefined for k > 0");
    if (k == 0) s.set(0, Rational(1));
  }
  return s;
}

/// e_k as an outer series: coefficient of w^m is 1/((m-1)! m^k).
inline ScalarSeries polyexp_outer(int k, std::size_t order) {
  check_poly_order(k);
  ScalarSeries s(order);
  for (std::size_t m = 1; m <= order; ++m) {
    s.set(m, inverse_power(m, k) / factorial(m - 1));
  }
  return s;
}

/// Li_k(inner) truncated at inner's order. Under from_zero with k = 0 the
/// constant 1 is added after composition, so inner must still vanish at 0.
template <class C>
TruncatedSeries<C> polylog_series(int k, const TruncatedSeries<C>& inner,
                                  PolylogStart start = PolylogStart::from_one) {
  return ps_compose(polylog_outer(k, inner.order(), start), inner);
}

template <class C>
TruncatedSeries<C> polyexp_series(int k, const TruncatedSeries<C>& inner) {
  return ps_compose(polyexp_outer(k, inner.order()), inner);
}

namespace detail {

// e^{-t ln a} + lambda e^{t ln b}
inline ScalarSeries genocchi_denominator(const ParamPoint& p, std::size_t order) {
  if (1 + p.lambda == 0) throw SingularDenominator("1 + lambda = 0");
  return ps_exp_linear(-p.ln_a, order) + p.lambda * ps_exp_linear(p.ln_b, order);
}

}  // namespace detail

/// ( Li_k(1 - e^{-2t(ln a + ln b)}) / (e^{-t ln a} + lambda e^{t ln b}) )^alpha
inline ScalarSeries kernel_type1(const ParamPoint& p, int k, unsigned alpha, std::size_t order,
                                 PolylogStart start = PolylogStart::from_one) {
  check_poly_order(k);
  const auto den = detail::genocchi_denominator(p, order);
  if (alpha == 0) return ScalarSeries::one(order);
  const auto inner = ScalarSeries::one(order) - ps_exp_linear(-2 * p.ln_ab(), order);
  const auto num = polylog_series(k, inner, start);
  return ps_ipow(ps_div(num, den), alpha);
}

/// ( e_k(log(1 + 2t(ln a + ln b))) / (e^{-t ln a} + lambda e^{t ln b}) )^alpha
inline ScalarSeries kernel_type2(const ParamPoint& p, int k, unsigned alpha, std::size_t order) {
  check_poly_order(k);
  const auto den = detail::genocchi_denominator(p, order);
  if (alpha == 0) return ScalarSeries::one(order);
  const auto log_arg = ps_compose(log1p_outer(order), Rational(2 * p.ln_ab()) * ScalarSeries::variable(order));
  const auto num = polyexp_series(k, log_arg);
  return ps_ipow(ps_div(num, den), alpha);
}

}  // namespace genocchi

#endif  // GENOCCHI_KERNELS_HPP
