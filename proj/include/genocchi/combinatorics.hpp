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

#ifndef GENOCCHI_COMBINATORICS_HPP
#define GENOCCHI_COMBINATORICS_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "genocchi/errors.hpp"
#include "genocchi/poly.hpp"
#include "genocchi/rational.hpp"

namespace genocchi {

enum class StirlingKind { first_signed, second };

/// Triangular table of Stirling numbers for 0 <= m <= n <= nmax, built from
/// the three-term recurrences. Entries outside the triangle read as zero.
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, std::size_t nmax) : kind_(kind), rows_(nmax + 1) {
    rows_[0] = {Integer(1)};
    for (std::size_t n = 1; n <= nmax; ++n) {
      auto& row = rows_[n];
      row.assign(n + 1, Integer(0));
      const auto& prev = rows_[n - 1];
      for (std::size_t m = 1; m <= n; ++m) {
        const Integer below = m < n ? prev[m] : Integer(0);
        if (kind == StirlingKind::second) {
          // S(n,m) = m S(n-1,m) + S(n-1,m-1)
          row[m] = static_cast<unsigned long>(m) * below + prev[m - 1];
        } else {
          // s(n,m) = s(n-1,m-1) - (n-1) s(n-1,m)
          row[m] = prev[m - 1] - static_cast<unsigned long>(n - 1) * below;
        }
      }
    }
  }

  StirlingKind kind() const { return kind_; }
  std::size_t nmax() const { return rows_.size() - 1; }

  Integer at(std::size_t n, std::size_t m) const {
    if (n >= rows_.size() || m > n) return 0;
    return rows_[n][m];
  }

 private:
  StirlingKind kind_;
  std::vector<std::vector<Integer>> rows_;
};

namespace detail {

inline constexpr std::size_t kCachedStirlingRows = 64;

inline const StirlingTable& cached_table(StirlingKind kind) {
  static const StirlingTable first(StirlingKind::first_signed, kCachedStirlingRows);
  static const StirlingTable second(StirlingKind::second, kCachedStirlingRows);
  return kind == StirlingKind::second ? second : first;
}

inline Integer stirling(StirlingKind kind, std::size_t n, std::size_t m) {
  if (m > n) return 0;
  if (n <= kCachedStirlingRows) return cached_table(kind).at(n, m);
  return StirlingTable(kind, n).at(n, m);
}

}  // namespace detail

/// Second kind; zero when m > n.
inline Integer stirling2(std::size_t n, std::size_t m) {
  return detail::stirling(StirlingKind::second, n, m);
}

/// Signed first kind (coefficients of log(1+t)^m/m!); zero when m > n.
inline Integer stirling1_signed(std::size_t n, std::size_t m) {
  return detail::stirling(StirlingKind::first_signed, n, m);
}

/// Zero when k > n.
inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer multinomial(std::size_t n, std::span<const std::size_t> parts) {
  if (std::accumulate(parts.begin(), parts.end(), std::size_t{0}) != n) {
    throw PartitionError("multinomial parts do not sum to n");
  }
  Integer r(1);
  std::size_t remaining = n;
  for (std::size_t p : parts) {
    r *= binomial(remaining, p);
    remaining -= p;
  }
  return r;
}

/// x(x+1)...(x+m-1)
inline Poly rising_poly(std::size_t m) {
  Poly p(1);
  for (std::size_t i = 0; i < m; ++i) p *= Poly::affine(1, static_cast<long>(i));
  return p;
}

/// x(x-1)...(x-m+1)
inline Poly falling_poly(std::size_t m) {
  Poly p(1);
  for (std::size_t i = 0; i < m; ++i) p *= Poly::affine(1, -static_cast<long>(i));
  return p;
}

}  // namespace genocchi

#endif  // GENOCCHI_COMBINATORICS_HPP
