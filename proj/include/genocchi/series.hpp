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

#ifndef GENOCCHI_SERIES_HPP
#define GENOCCHI_SERIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "genocchi/errors.hpp"
#include "genocchi/poly.hpp"
#include "genocchi/rational.hpp"

namespace genocchi {

// What the series kernels need to know about a coefficient ring beyond its
// arithmetic operators.
template <class Coeff>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static bool is_scalar(const Rational&) { return true; }
  static Rational scalar(const Rational& c) { return c; }
};

template <>
struct coeff_traits<Poly> {
  static bool is_zero(const Poly& c) { return c.is_zero(); }
  static bool is_scalar(const Poly& c) { return c.is_constant(); }
  static Rational scalar(const Poly& c) { return c.constant_term(); }
};

/// Power series in t truncated after t^order. Entry n is the plain Taylor
/// coefficient of t^n; no factorial normalization happens here.
template <class Coeff>
class TruncatedSeries {
 public:
  using coeff_type = Coeff;
  using traits = coeff_traits<Coeff>;

  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1, Coeff(0)) {}

  explicit TruncatedSeries(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
  }

  static TruncatedSeries constant(const Coeff& value, std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
  }

  static TruncatedSeries one(std::size_t order) { return constant(Coeff(1), order); }

  /// The series t (or 0 when order is 0).
  static TruncatedSeries variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = Coeff(1);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Coeff& operator[](std::size_t n) const { return c_.at(n); }
  void set(std::size_t n, Coeff value) { c_.at(n) = std::move(value); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  /// Index of the lowest nonzero coefficient; empty when every stored
  /// coefficient is zero.
  std::optional<std::size_t> valuation() const {
    for (std::size_t n = 0; n < c_.size(); ++n) {
      if (!traits::is_zero(c_[n])) return n;
    }
    return std::nullopt;
  }

  TruncatedSeries truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return TruncatedSeries(std::vector<Coeff>(c_.begin(), c_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
    return *this;
  }

  TruncatedSeries& operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= order; ++j) {
        if (traits::is_zero(b.c_[j])) continue;
        Coeff term = a.c_[i];
        term *= b.c_[j];
        r.c_[i + j] += term;
      }
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Coeff> c_;
};

using ScalarSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<Poly>;

/// Scalar series viewed as a series with constant polynomial coefficients.
inline PolySeries lift(const ScalarSeries& s) {
  std::vector<Poly> c;
  c.reserve(s.order() + 1);
  for (const auto& v : s.coeffs()) c.emplace_back(v);
  return PolySeries(std::move(c));
}

template <class C>
TruncatedSeries<C> ps_add(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return a + b;
}

template <class C>
TruncatedSeries<C> ps_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return a * b;
}

/// Quotient num/den. A common factor t^v, v = valuation(den), is cancelled
/// first, so the result has order min(order) - v.
template <class C>
TruncatedSeries<C> ps_div(const TruncatedSeries<C>& num, const TruncatedSeries<C>& den) {
  using traits = coeff_traits<C>;
  const std::size_t order = std::min(num.order(), den.order());
  const auto v = den.truncated(order).valuation();
  if (!v) throw DivisionByNonUnit("division by a series that vanishes to the working order");
  if (!traits::is_scalar(den[*v])) {
    throw DivisionByNonUnit("lowest coefficient of the divisor is not a scalar");
  }
  for (std::size_t n = 0; n < *v; ++n) {
    if (!traits::is_zero(num[n])) {
      throw ValuationError("numerator valuation is below the divisor valuation");
    }
  }
  const Rational lead = traits::scalar(den[*v]);
  const std::size_t out_order = order - *v;
  TruncatedSeries<C> q(out_order);
  for (std::size_t n = 0; n <= out_order; ++n) {
    C acc = num[n + *v];
    for (std::size_t i = 1; i <= n; ++i) {
      if (traits::is_zero(den[i + *v])) continue;
      C term = den[i + *v];
      term *= q[n - i];
      acc -= term;
    }
    acc /= lead;
    q.set(n, std::move(acc));
  }
  return q;
}

/// outer(inner(t)) by Horner's scheme; the result order is the smaller of
/// the two orders.
template <class C>
TruncatedSeries<C> ps_compose(const ScalarSeries& outer, const TruncatedSeries<C>& inner) {
  if (!coeff_traits<C>::is_zero(inner[0])) {
    throw CompositionError("inner series must have zero constant term");
  }
  const std::size_t order = std::min(outer.order(), inner.order());
  const auto in = inner.truncated(order);
  auto acc = TruncatedSeries<C>::constant(C(outer[order]), order);
  for (std::size_t m = order; m-- > 0;) {
    acc = acc * in;
    C c0 = acc[0];
    c0 += C(outer[m]);
    acc.set(0, std::move(c0));
  }
  return acc;
}

/// Composition with a polynomial-coefficient outer series; only degree-0
/// outer coefficients are meaningful.
inline PolySeries ps_compose(const PolySeries& outer, const PolySeries& inner) {
  std::vector<Rational> scalars;
  scalars.reserve(outer.order() + 1);
  for (const auto& c : outer.coeffs()) {
    if (!c.is_constant()) throw CompositionError("outer series must have scalar coefficients");
    scalars.push_back(c.constant_term());
  }
  return ps_compose(ScalarSeries(std::move(scalars)), inner);
}

/// a^alpha by repeated squaring.
template <class C>
TruncatedSeries<C> ps_ipow(const TruncatedSeries<C>& a, unsigned alpha) {
  auto result = TruncatedSeries<C>::one(a.order());
  auto base = a;
  while (alpha != 0) {
    if (alpha & 1U) result = result * base;
    alpha >>= 1;
    if (alpha != 0) base = base * base;
  }
  return result;
}

/// e^{r t}: coefficients r^n / n!.
inline ScalarSeries ps_exp_linear(const Rational& r, std::size_t order) {
  ScalarSeries s(order);
  Rational term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    s.set(n, term);
    term *= r;
    term /= static_cast<long>(n + 1);
  }
  return s;
}

/// e^{x r t}: coefficient of t^n is (r x)^n / n!.
inline PolySeries ps_exp_linear_x(const Rational& r, std::size_t order) {
  const auto scalars = ps_exp_linear(r, order);
  PolySeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s.set(n, Poly::monomial(scalars[n], n));
  return s;
}

/// log(1 + w) as an outer series: coefficients (-1)^{m+1}/m, m >= 1.
inline ScalarSeries log1p_outer(std::size_t order) {
  ScalarSeries s(order);
  for (std::size_t m = 1; m <= order; ++m) {
    s.set(m, make_rational(m % 2 == 1 ? 1 : -1, static_cast<long>(m)));
  }
  return s;
}

}  // namespace genocchi

#endif  // GENOCCHI_SERIES_HPP
