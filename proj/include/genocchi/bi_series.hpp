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

#ifndef GENOCCHI_BI_SERIES_HPP
#define GENOCCHI_BI_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "genocchi/errors.hpp"
#include "genocchi/rational.hpp"
#include "genocchi/series.hpp"

namespace genocchi {

/// Rational power series in (t, u) truncated to t^nt and u^nu separately.
/// Entry (n, m) is the plain coefficient of t^n u^m.
class BiSeries {
 public:
  BiSeries(std::size_t nt, std::size_t nu) : nt_(nt), nu_(nu), c_((nt + 1) * (nu + 1)) {}

  static BiSeries one(std::size_t nt, std::size_t nu) {
    BiSeries s(nt, nu);
    s.at(0, 0) = 1;
    return s;
  }

  /// f(t) ⊗ 1
  static BiSeries from_t(const ScalarSeries& f, std::size_t nt, std::size_t nu) {
    BiSeries s(nt, nu);
    for (std::size_t n = 0; n <= std::min(nt, f.order()); ++n) s.at(n, 0) = f[n];
    return s;
  }

  /// 1 ⊗ g(u)
  static BiSeries from_u(const ScalarSeries& g, std::size_t nt, std::size_t nu) {
    BiSeries s(nt, nu);
    for (std::size_t m = 0; m <= std::min(nu, g.order()); ++m) s.at(0, m) = g[m];
    return s;
  }

  std::size_t t_order() const { return nt_; }
  std::size_t u_order() const { return nu_; }

  Rational& at(std::size_t n, std::size_t m) { return c_.at(n * (nu_ + 1) + m); }
  const Rational& at(std::size_t n, std::size_t m) const { return c_.at(n * (nu_ + 1) + m); }

  BiSeries& operator+=(const BiSeries& o) { return combine(o, 1); }
  BiSeries& operator-=(const BiSeries& o) { return combine(o, -1); }

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.nt_ == b.nt_ && a.nu_ == b.nu_ && a.c_ == b.c_;
  }

 private:
  BiSeries& combine(const BiSeries& o, int sign) {
    BiSeries r(std::min(nt_, o.nt_), std::min(nu_, o.nu_));
    for (std::size_t n = 0; n <= r.nt_; ++n) {
      for (std::size_t m = 0; m <= r.nu_; ++m) {
        r.at(n, m) = at(n, m);
        if (sign > 0) {
          r.at(n, m) += o.at(n, m);
        } else {
          r.at(n, m) -= o.at(n, m);
        }
      }
    }
    *this = std::move(r);
    return *this;
  }

  std::size_t nt_;
  std::size_t nu_;
  std::vector<Rational> c_;
};

/// Product truncated to the smaller grid.
inline BiSeries bis_mul(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.t_order(), b.t_order()), std::min(a.u_order(), b.u_order()));
  for (std::size_t i = 0; i <= r.t_order(); ++i) {
    for (std::size_t j = 0; j <= r.u_order(); ++j) {
      const Rational& lhs = a.at(i, j);
      if (lhs == 0) continue;
      for (std::size_t p = 0; i + p <= r.t_order(); ++p) {
        for (std::size_t q = 0; j + q <= r.u_order(); ++q) {
          const Rational& rhs = b.at(p, q);
          if (rhs != 0) r.at(i + p, j + q) += lhs * rhs;
        }
      }
    }
  }
  return r;
}

/// 1/(1 - z) for z with zero constant term, solved from g = 1 + z g.
inline BiSeries bis_geom(const BiSeries& z) {
  if (z.at(0, 0) != 0) throw GeomError("geometric sum needs a zero constant term");
  const std::size_t nt = z.t_order();
  const std::size_t nu = z.u_order();
  BiSeries g(nt, nu);
  // Entries are filled in row-major order; every term on the right only
  // touches (n - i, m - j) with (i, j) != (0, 0), which is already known.
  for (std::size_t n = 0; n <= nt; ++n) {
    for (std::size_t m = 0; m <= nu; ++m) {
      Rational acc(n == 0 && m == 0 ? 1 : 0);
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
          if (i == 0 && j == 0) continue;
          const Rational& zij = z.at(i, j);
          if (zij != 0) acc += zij * g.at(n - i, m - j);
        }
      }
      g.at(n, m) = acc;
    }
  }
  return g;
}

}  // namespace genocchi

#endif  // GENOCCHI_BI_SERIES_HPP
