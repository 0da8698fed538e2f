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

#ifndef GENOCCHI_VERIFIER_CHECKS_HPP
#define GENOCCHI_VERIFIER_CHECKS_HPP

#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "genocchi/combinatorics.hpp"
#include "genocchi/families.hpp"
#include "genocchi/kernels.hpp"
#include "genocchi/poly.hpp"
#include "genocchi/rational.hpp"
#include "genocchi/series.hpp"
#include "genocchi/verifier/config.hpp"
#include "genocchi/verifier/result.hpp"

namespace genocchi {

/// Which of the two poly-Genocchi families a check body runs against.
enum class GenocchiType { type1 = 1, type2 = 2 };

namespace detail {

inline FamilySpec genocchi_spec(GenocchiType type, int k, unsigned alpha) {
  return type == GenocchiType::type1 ? FamilySpec::type1(k, alpha) : FamilySpec::type2(k, alpha);
}

inline std::vector<Poly> polys_of(const FamilySpec& spec, const ParamPoint& p, std::size_t order) {
  return family_series(spec, p, order).polys;
}

// p(a x + b)
inline Poly substitute(const Poly& p, const Rational& a, const Rational& b) {
  return p.compose(Poly::affine(a, b));
}

inline Rational rpow(const Rational& base, std::size_t e) { return pow(base, static_cast<long>(e)); }

inline Rational rbinom(std::size_t n, std::size_t k) { return Rational(binomial(n, k)); }

inline std::string where(std::size_t index, const ParamPoint& p, int k, unsigned alpha) {
  return "sample " + std::to_string(index) + " " + p.to_string() + ", k=" + std::to_string(k) +
         ", alpha=" + std::to_string(alpha);
}

// Runs body(p, k, alpha, context) over samples x k_range x alpha_range and
// stops at the first witness.
template <class Body>
Witness over_grid(const CheckConfig& cfg, bool skip_alpha_zero, Body&& body) {
  for (std::size_t i = 0; i < cfg.samples.size(); ++i) {
    for (int k : cfg.k_range) {
      for (unsigned alpha : cfg.alpha_range) {
        if (skip_alpha_zero && alpha == 0) continue;
        if (auto w = body(cfg.samples[i], k, alpha, where(i, cfg.samples[i], k, alpha))) return w;
      }
    }
  }
  return std::nullopt;
}

inline std::vector<Poly> zeros(std::size_t count) { return std::vector<Poly>(count); }

// Exponential-convolution power: e_n with sum e_n t^n/n! = (sum c_n t^n/n!)^alpha,
// by explicit enumeration of compositions n_1 + ... + n_alpha = n.
inline std::vector<Rational> multinomial_power(const std::vector<Rational>& c, unsigned alpha, std::size_t n_max) {
  std::vector<Rational> out(n_max + 1, Rational(0));
  std::vector<std::size_t> parts(alpha);
  std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t slot, std::size_t used,
                                                                       std::size_t n) {
    if (slot + 1 == alpha) {
      parts[slot] = n - used;
      Rational term(multinomial(n, parts));
      for (std::size_t part : parts) term *= c[part];
      out[n] += term;
      return;
    }
    for (std::size_t v = 0; v + used <= n; ++v) {
      parts[slot] = v;
      walk(slot + 1, used + v, n);
    }
  };
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (alpha == 0) {
      out[n] = n == 0 ? 1 : 0;
    } else {
      walk(0, 0, n);
    }
  }
  return out;
}

// ---- bodies shared by the type-1 and type-2 checks ----

// G_n(x+1) = sum_r C(n,r) Lc^r G_{n-r}(x)
inline Witness shift_body(const CheckConfig& cfg, GenocchiType type) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto g = polys_of(genocchi_spec(type, k, alpha), p, cfg.order);
    std::vector<Poly> lhs, rhs;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
      lhs.push_back(shift(g[n], 1));
      Poly acc;
      for (std::size_t r = 0; r <= n; ++r) acc += g[n - r] * (rbinom(n, r) * rpow(p.ln_c, r));
      rhs.push_back(std::move(acc));
    }
    return compare_polys(lhs, rhs, cfg.inject_fault, ctx);
  });
}

// G_n(x) = sum_i C(n,i) Lc^{n-i} G_i x^{n-i}, numbers taken from the kernel
inline Witness numbers_body(const CheckConfig& cfg, GenocchiType type) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto spec = genocchi_spec(type, k, alpha);
    const auto lhs = polys_of(spec, p, cfg.order);
    const auto g = numbers_up_to(spec, p, cfg.order);
    std::vector<Poly> rhs;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
      Poly acc;
      for (std::size_t i = 0; i <= n; ++i) acc += Poly::monomial(rbinom(n, i) * rpow(p.ln_c, n - i) * g[i], n - i);
      rhs.push_back(std::move(acc));
    }
    return compare_polys(lhs, rhs, cfg.inject_fault, ctx);
  });
}

// G_n(x; lambda, a, b, c) = L^n G_n^{base}((x Lc + alpha La) / L; lambda)
inline Witness base_reduction_body(const CheckConfig& cfg, GenocchiType type) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto spec = genocchi_spec(type, k, alpha);
    const auto lhs = polys_of(spec, p, cfg.order);
    const auto base = polys_of(spec, p.base(), cfg.order);
    const Rational l = p.ln_ab();
    if (l == 0) throw SingularDenominator("ln a + ln b = 0 in " + ctx);
    const Rational slope = p.ln_c / l;
    const Rational offset = Rational(static_cast<long>(alpha)) * p.ln_a / l;
    std::vector<Poly> rhs;
    for (std::size_t n = 0; n <= cfg.order; ++n) rhs.push_back(substitute(base[n], slope, offset) * rpow(l, n));
    return compare_polys(lhs, rhs, cfg.inject_fault, ctx);
  });
}

// d/dx G_{n+1}(x) = (n+1) Lc G_n(x)
inline Witness derivative_body(const CheckConfig& cfg, GenocchiType type) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto g = polys_of(genocchi_spec(type, k, alpha), p, cfg.order + 1);
    std::vector<Poly> lhs, rhs;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
      lhs.push_back(g[n + 1].derivative());
      rhs.push_back(g[n] * (Rational(static_cast<long>(n + 1)) * p.ln_c));
    }
    return compare_polys(lhs, rhs, cfg.inject_fault, ctx);
  });
}

// c = e: G_n(x) = sum_i C(n,i) G_{n-i} D^i x^n, via appell_expand
inline Witness appell_operator_body(const CheckConfig& cfg, GenocchiType type) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto spec = genocchi_spec(type, k, alpha);
    const ParamPoint pe = p.with_ln_c(1);
    const auto lhs = polys_of(spec, pe, cfg.order);
    std::vector<Poly> rhs;
    for (std::size_t n = 0; n <= cfg.order; ++n) rhs.push_back(appell_expand(spec, pe, n));
    return compare_polys(lhs, rhs, cfg.inject_fault, ctx + ", c=e");
  });
}

// G_n(x+y) = sum_{i=0}^{n} C(n,i) (y Lc)^{n-i} G_i(x); with_c = false forces
// c = e. The i = n+1 term carries C(n, n+1) and is asserted to vanish.
inline Witness addition_body(const CheckConfig& cfg, GenocchiType type, bool with_c) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const ParamPoint q = with_c ? p : p.with_ln_c(1);
    const auto g = polys_of(genocchi_spec(type, k, alpha), q, cfg.order + 1);
    for (const auto& y : cfg.y_samples) {
      const std::string here = ctx + ", y=" + to_string(y) + (with_c ? "" : ", c=e");
      const Rational step = y * q.ln_c;
      std::vector<Poly> lhs, rhs, extra;
      for (std::size_t n = 0; n <= cfg.order; ++n) {
        lhs.push_back(shift(g[n], y));
        Poly acc;
        for (std::size_t i = 0; i <= n; ++i) acc += g[i] * (rbinom(n, i) * rpow(step, n - i));
        rhs.push_back(std::move(acc));
        extra.push_back(g[n + 1] * rbinom(n, n + 1));
      }
      if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, here)) return w;
      if (auto w = compare_polys(extra, zeros(extra.size()), cfg.inject_fault, here + ", term i=n+1")) return w;
    }
    return Witness{};
  });
}

// G_n(x) = sum_{m=0}^{n} sum_{l=m}^{n} S2(l,m) C(n,l) Lc^l G_{n-l}(-m Lc; c=e) <x>_m
// with <x>_m the rising factorial. The m = n+1 term is asserted to vanish.
inline Witness rising_body(const CheckConfig& cfg, GenocchiType type) {
  std::vector<Poly> rising;
  for (std::size_t m = 0; m <= cfg.order + 1; ++m) rising.push_back(rising_poly(m));
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto spec = genocchi_spec(type, k, alpha);
    const auto lhs = polys_of(spec, p, cfg.order);
    const auto ge = polys_of(spec, p.with_ln_c(1), cfg.order);
    std::vector<Poly> rhs, extra;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
      auto term = [&](std::size_t m, std::size_t l) -> Rational {
        const Rational at = -Rational(static_cast<long>(m)) * p.ln_c;
        return Rational(stirling2(l, m)) * rbinom(n, l) * rpow(p.ln_c, l) * ge[n - l](at);
      };
      Poly acc;
      for (std::size_t m = 0; m <= n; ++m) {
        Rational weight(0);
        for (std::size_t l = m; l <= n; ++l) weight += term(m, l);
        acc += rising[m] * weight;
      }
      rhs.push_back(std::move(acc));
      Rational tail(0);
      for (std::size_t l = 0; l <= n; ++l) tail += term(n + 1, l);
      extra.push_back(rising[n + 1] * tail);
    }
    if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, ctx)) return w;
    return compare_polys(extra, zeros(extra.size()), cfg.inject_fault, ctx + ", term m=n+1");
  });
}

// G_n(x) = sum_{m=0}^{n} sum_{l=m}^{n} S2(l,m) C(n,l) Lc^l G_{n-l} (x)_m
// with (x)_m the falling factorial. The m = n+1 term is asserted to vanish.
inline Witness falling_body(const CheckConfig& cfg, GenocchiType type) {
  std::vector<Poly> falling;
  for (std::size_t m = 0; m <= cfg.order + 1; ++m) falling.push_back(falling_poly(m));
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto spec = genocchi_spec(type, k, alpha);
    const auto lhs = polys_of(spec, p, cfg.order);
    const auto g = numbers_up_to(spec, p, cfg.order);
    std::vector<Poly> rhs, extra;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
      auto term = [&](std::size_t m, std::size_t l) -> Rational {
        return Rational(stirling2(l, m)) * rbinom(n, l) * rpow(p.ln_c, l) * g[n - l];
      };
      Poly acc;
      for (std::size_t m = 0; m <= n; ++m) {
        Rational weight(0);
        for (std::size_t l = m; l <= n; ++l) weight += term(m, l);
        acc += falling[m] * weight;
      }
      rhs.push_back(std::move(acc));
      Rational tail(0);
      for (std::size_t l = 0; l <= n; ++l) tail += term(n + 1, l);
      extra.push_back(falling[n + 1] * tail);
    }
    if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, ctx)) return w;
    return compare_polys(extra, zeros(extra.size()), cfg.inject_fault, ctx + ", term m=n+1");
  });
}

// G_n(x) = sum_l sum_m C(n,l) S2(l+s,s)/C(l+s,s) C(n-l,m) G_{n-l-m} B_m^{(s)}(x Lc; lambda_B).
// numbers_type picks which family supplies G_{n-l-m}; unit_lambda sets lambda_B = 1.
inline Witness bernoulli_order_body(const CheckConfig& cfg, GenocchiType type, GenocchiType numbers_type,
                                    bool unit_lambda) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto lhs = polys_of(genocchi_spec(type, k, alpha), p, cfg.order);
    const auto g = numbers_up_to(genocchi_spec(numbers_type, k, alpha), p, cfg.order);
    const ParamPoint pb{unit_lambda ? Rational(1) : p.lambda, 0, 1, 1};
    for (unsigned s : cfg.s_range) {
      const auto b = polys_of(FamilySpec::of(FamilyTag::ApostolBernoulliHigher, 1, s), pb, cfg.order);
      std::vector<Poly> bx;
      for (const auto& poly : b) bx.push_back(substitute(poly, p.ln_c, 0));
      std::vector<Poly> rhs;
      for (std::size_t n = 0; n <= cfg.order; ++n) {
        Poly acc;
        for (std::size_t l = 0; l <= n; ++l) {
          const Rational outer = rbinom(n, l) * Rational(stirling2(l + s, s)) / rbinom(l + s, s);
          for (std::size_t m = 0; m + l <= n; ++m) acc += bx[m] * (outer * rbinom(n - l, m) * g[n - l - m]);
        }
        rhs.push_back(std::move(acc));
      }
      if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, ctx + ", s=" + std::to_string(s))) return w;
    }
    return Witness{};
  });
}

// G_n(x) = sum_{m=0}^{n} C(n,m) (1-mu)^{-s} sum_{j=0}^{s} C(s,j) (-mu)^{s-j}
//          G_{n-m}(j'; c=e) F_m^{(s)}(x'; mu)
// with x' = x or x Lc and j' = j or j L. The m = n+1 term carries C(n, n+1).
inline Witness frobenius_body(const CheckConfig& cfg, GenocchiType type, bool scale_x, bool scale_j) {
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto spec = genocchi_spec(type, k, alpha);
    const auto lhs = polys_of(spec, p, cfg.order);
    const auto ge = polys_of(spec, p.with_ln_c(1), cfg.order + 1);
    for (unsigned s : cfg.s_range) {
      for (const auto& mu : cfg.mu_samples) {
        FamilySpec fs = FamilySpec::of(FamilyTag::FrobeniusHigher, 1, s);
        fs.mu = mu;
        const auto f = polys_of(fs, ParamPoint::classical(), cfg.order + 1);
        std::vector<Poly> fx;
        for (const auto& poly : f) fx.push_back(scale_x ? substitute(poly, p.ln_c, 0) : poly);
        const Rational norm = 1 / rpow(1 - mu, s);
        // inner[r] = sum_j C(s,j) (-mu)^{s-j} G_r(j')
        std::vector<Rational> inner(cfg.order + 2, Rational(0));
        for (std::size_t r = 0; r <= cfg.order + 1; ++r) {
          for (unsigned j = 0; j <= s; ++j) {
            const Rational at = scale_j ? Rational(static_cast<long>(j)) * p.ln_ab() : Rational(static_cast<long>(j));
            inner[r] += rbinom(s, j) * rpow(-mu, s - j) * ge[r](at);
          }
        }
        std::vector<Poly> rhs, extra;
        for (std::size_t n = 0; n <= cfg.order; ++n) {
          Poly acc;
          for (std::size_t m = 0; m <= n; ++m) acc += fx[m] * (rbinom(n, m) * norm * inner[n - m]);
          rhs.push_back(std::move(acc));
          extra.push_back(fx[n + 1] * (rbinom(n, n + 1) * norm * inner[0]));
        }
        const std::string here = ctx + ", s=" + std::to_string(s) + ", mu=" + to_string(mu);
        if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, here)) return w;
        if (auto w = compare_polys(extra, zeros(extra.size()), cfg.inject_fault, here + ", term m=n+1")) return w;
      }
    }
    return Witness{};
  });
}

// G_n(x) = (2L)^n sum_{j=0}^{alpha} C(alpha,j) (-1)^j lambda^{alpha-j}
//          B_n(((alpha-j) Lb + x Lc + (2 alpha - j) La) / (2L); lambda^2)
inline Witness bernoulli_relation_body(const CheckConfig& cfg, GenocchiType type) {
  const FamilyTag bernoulli =
      type == GenocchiType::type1 ? FamilyTag::ApostolPolyBernoulliT1 : FamilyTag::ApostolPolyBernoulliT2;
  return over_grid(cfg, false, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto lhs = polys_of(genocchi_spec(type, k, alpha), p, cfg.order);
    const auto b = polys_of(FamilySpec::of(bernoulli, k, alpha), ParamPoint{p.lambda * p.lambda, 0, 1, 1}, cfg.order);
    const Rational two_l = 2 * p.ln_ab();
    std::vector<Poly> rhs(cfg.order + 1);
    for (unsigned j = 0; j <= alpha; ++j) {
      const Rational weight =
          rbinom(alpha, j) * (j % 2 == 0 ? Rational(1) : Rational(-1)) * rpow(p.lambda, alpha - j);
      if (weight == 0) continue;
      const Rational offset = (Rational(static_cast<long>(alpha - j)) * p.ln_b +
                               Rational(static_cast<long>(2 * alpha - j)) * p.ln_a) / two_l;
      const Rational slope = p.ln_c / two_l;
      for (std::size_t n = 0; n <= cfg.order; ++n) rhs[n] += substitute(b[n], slope, offset) * weight;
    }
    for (std::size_t n = 0; n <= cfg.order; ++n) rhs[n] *= rpow(two_l, n);
    return compare_polys(lhs, rhs, cfg.inject_fault, ctx);
  });
}

/// Sign conventions for the Stirling coefficients c_j.
struct StirlingVariant {
  bool flip_inner_sign = false;  // (-1)^{m+1} -> (-1)^m (type 1 only)
  bool negate_base = false;      // (2L)^j -> (-2L)^j
};

// c_j = sum_m (-1)^{m+1} (2L)^j m! S2(j+1,m+1) / ((j+1)(m+1)^{k-1})   (type 1)
// c_j = sum_m (2L)^j s(j+1,m+1) / ((j+1)(m+1)^{k-1})                  (type 2)
inline std::vector<Rational> stirling_coefficients(GenocchiType type, int k, const Rational& l, std::size_t n_max,
                                                   StirlingVariant v) {
  std::vector<Rational> c(n_max + 1, Rational(0));
  const Rational base = v.negate_base ? Rational(-2 * l) : Rational(2 * l);
  for (std::size_t j = 0; j <= n_max; ++j) {
    Rational acc(0);
    for (std::size_t m = 0; m <= j; ++m) {
      Rational term = inverse_power(m + 1, k - 1) / static_cast<long>(j + 1);
      if (type == GenocchiType::type1) {
        const bool negative = v.flip_inner_sign ? (m % 2 == 1) : (m % 2 == 0);
        term *= Rational(factorial(m)) * Rational(stirling2(j + 1, m + 1));
        if (negative) term = -term;
      } else {
        term *= Rational(stirling1_signed(j + 1, m + 1));
      }
      acc += term;
    }
    c[j] = acc * rpow(base, j);
  }
  return c;
}

// G_n(x) = sum_j C(n,j) L^{n-j} G^{(alpha)}_{n-j}((x Lc + alpha La)/L; lambda) d_j
// where d_j is the alpha-fold multinomial convolution of c_j.
inline Witness stirling_body(const CheckConfig& cfg, GenocchiType type, StirlingVariant v) {
  return over_grid(cfg, true, [&](const ParamPoint& p, int k, unsigned alpha, const std::string& ctx) {
    const auto lhs = polys_of(genocchi_spec(type, k, alpha), p, cfg.order);
    const auto base = polys_of(FamilySpec::of(FamilyTag::ApostolGenocchiHigher, 1, alpha), p.base(), cfg.order);
    const Rational l = p.ln_ab();
    const auto c = stirling_coefficients(type, k, l, cfg.order, v);
    const auto d = multinomial_power(c, alpha, cfg.order);
    const Rational slope = p.ln_c / l;
    const Rational offset = Rational(static_cast<long>(alpha)) * p.ln_a / l;
    std::vector<Poly> shifted;
    for (const auto& poly : base) shifted.push_back(substitute(poly, slope, offset));
    std::vector<Poly> rhs;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
      Poly acc;
      for (std::size_t j = 0; j <= n; ++j) acc += shifted[n - j] * (rbinom(n, j) * rpow(l, n - j) * d[j]);
      rhs.push_back(std::move(acc));
    }
    return compare_polys(lhs, rhs, cfg.inject_fault, ctx);
  });
}

// At alpha = 1 the convolution is the identity: d_j = c_j.
inline Witness stirling_alpha_one_body(const CheckConfig& cfg, GenocchiType type) {
  for (std::size_t i = 0; i < cfg.samples.size(); ++i) {
    for (int k : cfg.k_range) {
      const auto c = stirling_coefficients(type, k, cfg.samples[i].ln_ab(), cfg.order, {});
      const auto d = multinomial_power(c, 1, cfg.order);
      if (auto w = compare_scalars(d, c, cfg.inject_fault, where(i, cfg.samples[i], k, 1))) return w;
    }
  }
  return std::nullopt;
}

inline std::string type_label(GenocchiType type) { return type == GenocchiType::type1 ? "type 1" : "type 2"; }

// Identity strings shared by type 1 and type 2.
inline constexpr const char* kShiftIdentity = "G_n(x+1) = sum_{r=0}^{n} C(n,r) (ln c)^r G_{n-r}(x)";
inline constexpr const char* kNumbersIdentity =
    "G_n(x; lambda,a,b,c) = sum_{i=0}^{n} C(n,i) (ln c)^{n-i} G_i(lambda,a,b) x^{n-i}";
inline constexpr const char* kBaseIdentity =
    "G_n(x; lambda,a,b,c) = (ln a + ln b)^n G_n((x ln c + alpha ln a)/(ln a + ln b); lambda)";
inline constexpr const char* kDerivativeIdentity = "d/dx G_{n+1}(x) = (n+1) (ln c) G_n(x)";
inline constexpr const char* kOperatorIdentity = "G_n(x; lambda,a,b) = sum_{i=0}^{n} C(n,i) G_{n-i}(lambda,a,b) D^i x^n";
inline constexpr const char* kAdditionEIdentity = "G_n(x+y; lambda,a,b) = sum_{i=0}^{n} C(n,i) G_i(x; lambda,a,b) y^{n-i}";
inline constexpr const char* kAdditionCIdentity =
    "G_n(x+y; lambda,a,b,c) = sum_{i=0}^{n} C(n,i) (ln c)^{n-i} G_i(x; lambda,a,b,c) y^{n-i}";
inline constexpr const char* kRisingIdentity =
    "G_n(x) = sum_{m=0}^{n} sum_{l=m}^{n} S2(l,m) C(n,l) (ln c)^l G_{n-l}(-m ln c; lambda,a,b) <x>_m";
inline constexpr const char* kFallingIdentity =
    "G_n(x) = sum_{m=0}^{n} sum_{l=m}^{n} S2(l,m) C(n,l) (ln c)^l G_{n-l}(lambda,a,b) (x)_m";
inline constexpr const char* kBernoulliOrderIdentity =
    "G_n(x) = sum_l sum_m C(n,l) S2(l+s,s)/C(l+s,s) C(n-l,m) G_{n-l-m}(lambda,a,b) B_m^{(s)}(x ln c; lambda)";
inline constexpr const char* kFrobeniusIdentity =
    "G_n(x) = sum_{m=0}^{n} C(n,m) (1-mu)^{-s} sum_{j=0}^{s} C(s,j) (-mu)^{s-j} G_{n-m}(j; lambda,a,b) F_m^{(s)}(x; mu)";

inline PartResult rising_part(const CheckConfig& cfg, GenocchiType type) {
  return plain_part("rising_factorial", kRisingIdentity, [&] { return rising_body(cfg, type); });
}

inline PartResult falling_part(const CheckConfig& cfg, GenocchiType type) {
  return plain_part("falling_factorial", kFallingIdentity, [&] { return falling_body(cfg, type); });
}

inline PartResult bernoulli_order_part(const CheckConfig& cfg, GenocchiType type) {
  struct Reading {
    GenocchiType numbers;
    bool unit_lambda;
    const char* name;
  };
  std::vector<Reading> readings;
  if (type == GenocchiType::type1) {
    readings = {{GenocchiType::type1, false, "B with lambda"}, {GenocchiType::type1, true, "B with lambda = 1"}};
  } else {
    // The printed type-2 analogue keeps type-1 numbers on the right.
    readings = {{GenocchiType::type1, false, "type-1 numbers, B with lambda"},
                {GenocchiType::type1, true, "type-1 numbers, B with lambda = 1"},
                {GenocchiType::type2, false, "type-2 numbers, B with lambda"},
                {GenocchiType::type2, true, "type-2 numbers, B with lambda = 1"}};
  }
  std::vector<std::string> names;
  for (const auto& r : readings) names.emplace_back(r.name);
  return resolve_variants("bernoulli_order_s", kBernoulliOrderIdentity, names, [&](std::size_t v) {
    return bernoulli_order_body(cfg, type, readings[v].numbers, readings[v].unit_lambda);
  });
}

inline PartResult frobenius_part(const CheckConfig& cfg, GenocchiType type) {
  const std::vector<std::string> names{"F at x, G at j", "F at x ln c, G at j", "F at x, G at j (ln a + ln b)",
                                       "F at x ln c, G at j (ln a + ln b)"};
  return resolve_variants("frobenius", kFrobeniusIdentity, names,
                          [&](std::size_t v) { return frobenius_body(cfg, type, v % 2 == 1, v >= 2); });
}

template <class Fn>
CheckResult timed(std::string id, std::string identity, Fn&& fill) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = std::move(id);
  r.identity = std::move(identity);
  fill(r.parts);
  aggregate(r);
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace detail

// ---- checks ----

inline CheckResult check_shift_recurrence(const CheckConfig& cfg) {
  return detail::timed("t1.shift_recurrence", detail::kShiftIdentity, [&](auto& parts) {
    parts.push_back(plain_part("shift", detail::kShiftIdentity,
                               [&] { return detail::shift_body(cfg, GenocchiType::type1); }));
  });
}

inline CheckResult check_expansion_in_numbers(const CheckConfig& cfg) {
  return detail::timed("t1.expansion_in_numbers", detail::kNumbersIdentity, [&](auto& parts) {
    parts.push_back(plain_part("expansion", detail::kNumbersIdentity,
                               [&] { return detail::numbers_body(cfg, GenocchiType::type1); }));
  });
}

inline CheckResult check_base_reduction(const CheckConfig& cfg, GenocchiType type) {
  const std::string id = type == GenocchiType::type1 ? "t1.base_reduction" : "t2.base_reduction";
  return detail::timed(id, detail::kBaseIdentity, [&](auto& parts) {
    parts.push_back(
        plain_part("base_reduction", detail::kBaseIdentity, [&] { return detail::base_reduction_body(cfg, type); }));
  });
}

inline CheckResult check_appell(const CheckConfig& cfg) {
  const auto t = GenocchiType::type1;
  return detail::timed("t1.appell", "Appell structure: derivative, operator expansion, addition formulas",
                       [&](auto& parts) {
                         parts.push_back(plain_part("derivative", detail::kDerivativeIdentity,
                                                    [&] { return detail::derivative_body(cfg, t); }));
                         parts.push_back(plain_part("operator", detail::kOperatorIdentity,
                                                    [&] { return detail::appell_operator_body(cfg, t); }));
                         parts.push_back(plain_part("addition_e", detail::kAdditionEIdentity,
                                                    [&] { return detail::addition_body(cfg, t, false); }));
                         parts.push_back(plain_part("addition_c", detail::kAdditionCIdentity,
                                                    [&] { return detail::addition_body(cfg, t, true); }));
                       });
}

inline CheckResult check_bernoulli_relation(const CheckConfig& cfg, GenocchiType type) {
  const std::string id = type == GenocchiType::type1 ? "t1.bernoulli_relation" : "t2.bernoulli_relation";
  const std::string identity =
      "G_n(x) = (2(ln a + ln b))^n sum_{j=0}^{alpha} C(alpha,j) (-1)^j lambda^{alpha-j} "
      "B_n(((alpha-j) ln b + x ln c + (2alpha-j) ln a)/(2(ln a + ln b)); lambda^2)";
  return detail::timed(id, identity, [&](auto& parts) {
    parts.push_back(plain_part("bernoulli", identity, [&] { return detail::bernoulli_relation_body(cfg, type); }));
  });
}

inline CheckResult check_stirling_relation(const CheckConfig& cfg, GenocchiType type) {
  const bool t1 = type == GenocchiType::type1;
  const std::string id = t1 ? "t1.stirling_relation" : "t2.stirling_relation";
  const std::string identity =
      t1 ? "G_n(x) = sum_j C(n,j) L^{n-j} G^{(alpha)}_{n-j}((x ln c + alpha ln a)/L; lambda) d_j, "
           "c_j = sum_m (-1)^{m+1} (2L)^j m! S2(j+1,m+1) / ((j+1)(m+1)^{k-1}), L = ln a + ln b"
         : "G_n(x) = sum_j C(n,j) L^{n-j} G^{(alpha)}_{n-j}((x ln c + alpha ln a)/L; lambda) d_j, "
           "c_j = sum_m (2L)^j s(j+1,m+1) / ((j+1)(m+1)^{k-1}), L = ln a + ln b";
  std::vector<detail::StirlingVariant> variants{{false, false}, {false, true}};
  std::vector<std::string> names{"(2L)^j", "(-2L)^j"};
  if (t1) {
    names = {"(-1)^{m+1} (2L)^j", "(-1)^{m+1} (-2L)^j", "(-1)^m (-2L)^j"};
    variants.push_back({true, true});
  }
  return detail::timed(id, identity, [&](auto& parts) {
    parts.push_back(resolve_variants("stirling", identity, names, [&](std::size_t v) {
      return detail::stirling_body(cfg, type, variants[v]);
    }));
    parts.push_back(plain_part("alpha_one_consistency", "alpha = 1: d_j = c_j",
                               [&] { return detail::stirling_alpha_one_body(cfg, type); }));
  });
}

inline CheckResult check_explicit_formulas(const CheckConfig& cfg) {
  const auto t = GenocchiType::type1;
  return detail::timed("t1.explicit_formulas", "explicit formulas via Stirling, Bernoulli and Frobenius families",
                       [&](auto& parts) {
                         parts.push_back(detail::rising_part(cfg, t));
                         parts.push_back(detail::falling_part(cfg, t));
                         parts.push_back(detail::bernoulli_order_part(cfg, t));
                         parts.push_back(detail::frobenius_part(cfg, t));
                       });
}

inline CheckResult check_remark_identities(const CheckConfig& cfg) {
  const auto t = GenocchiType::type2;
  return detail::timed("t2.remark_identities", "type-2 analogues of the type-1 structural identities",
                       [&](auto& parts) {
                         parts.push_back(plain_part("expansion", detail::kNumbersIdentity,
                                                    [&] { return detail::numbers_body(cfg, t); }));
                         parts.push_back(
                             plain_part("shift", detail::kShiftIdentity, [&] { return detail::shift_body(cfg, t); }));
                         parts.push_back(plain_part("derivative", detail::kDerivativeIdentity,
                                                    [&] { return detail::derivative_body(cfg, t); }));
                         parts.push_back(plain_part("addition_c", detail::kAdditionCIdentity,
                                                    [&] { return detail::addition_body(cfg, t, true); }));
                         parts.push_back(detail::rising_part(cfg, t));
                         parts.push_back(detail::falling_part(cfg, t));
                         parts.push_back(detail::bernoulli_order_part(cfg, t));
                         parts.push_back(detail::frobenius_part(cfg, t));
                       });
}

inline CheckResult check_symmetrized_gf(const CheckConfig& cfg) {
  const std::string identity =
      "sum_{n,m} S_n^{(m,1)}(x,y) t^n/n! u^m/m! = e^{Yu} e^{Xt} e^{2t} / ((1 + lambda e^t)(e^{2t} - e^{2t+u} + e^u)), "
      "X = (x ln c + ln a)/L, Y = (y ln c + ln a)/L, alpha = 1";
  const std::size_t nb = std::min(cfg.order, cfg.bivariate_order);
  const std::vector<std::string> names{"polylog sum from m = 1", "polylog sum from m = 0"};
  const std::array<PolylogStart, 2> starts{PolylogStart::from_one, PolylogStart::from_zero};
  auto body = [&](std::size_t v) -> Witness {
    for (std::size_t i = 0; i < cfg.samples.size(); ++i) {
      const auto& p = cfg.samples[i];
      for (const auto& y : cfg.y_samples) {
        const auto table = symmetrized_table(nb, nb, 1, p, y, starts[v]);
        for (const auto& x : cfg.x_samples) {
          const auto rhs = double_gf_rhs(1, p, x, y, nb, nb);
          for (std::size_t m = 0; m <= nb; ++m) {
            std::vector<Rational> l, r;
            for (std::size_t n = 0; n <= nb; ++n) {
              l.push_back(table[m][n](x) / (Rational(factorial(n)) * Rational(factorial(m))));
              r.push_back(rhs.at(n, m));
            }
            const std::string ctx = "sample " + std::to_string(i) + " " + p.to_string() + ", x=" + to_string(x) +
                                    ", y=" + to_string(y) + ", coefficient of u^" + std::to_string(m);
            if (auto w = compare_scalars(l, r, cfg.inject_fault, ctx)) return w;
          }
        }
      }
    }
    return std::nullopt;
  };
  return detail::timed("t1.symmetrized_gf", identity, [&](auto& parts) {
    auto part = resolve_variants("double_gf", identity, names, body);
    const std::string scope = "checked at alpha = 1 up to t^" + std::to_string(nb) + " u^" + std::to_string(nb);
    part.variant_note = part.variant_note ? *part.variant_note + "; " + scope : scope;
    parts.push_back(std::move(part));
  });
}

inline CheckResult check_classical_reduction(const CheckConfig& cfg) {
  const std::string identity = "k = 1, a = 1, b = c = e reduces to the (Apostol, higher-order) Genocchi polynomials";
  const std::size_t n_max = std::max<std::size_t>(cfg.order, 6);
  return detail::timed("classical.reduction", identity, [&](auto& parts) {
    parts.push_back(plain_part("classical", "G_n^{(1,1)}(x; 1, 1, e, e) = G_n(x)", [&] {
      const auto lhs = detail::polys_of(FamilySpec::type1(1, 1), ParamPoint::classical(), n_max);
      const auto rhs =
          detail::polys_of(FamilySpec::of(FamilyTag::ClassicalGenocchi), ParamPoint::classical(), n_max);
      return compare_polys(lhs, rhs, cfg.inject_fault, "classical point");
    }));
    parts.push_back(plain_part("known_values", "G_1 = 1, G_2 = 2x - 1, numbers 0, 1, -1, 0, 1, 0, -3", [&] {
      const auto g = detail::polys_of(FamilySpec::type1(1, 1), ParamPoint::classical(), 6);
      const std::vector<Poly> lhs{g[1], g[2]};
      const std::vector<Poly> rhs{Poly(1), Poly::affine(2, -1)};
      if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, "polynomials G_1, G_2 (indexed from 0)")) return w;
      const auto numbers = numbers_up_to(FamilySpec::type1(1, 1), ParamPoint::classical(), 6);
      const std::vector<Rational> expected{0, 1, -1, 0, 1, 0, -3};
      return compare_scalars(numbers, expected, cfg.inject_fault, "numbers");
    }));
    parts.push_back(plain_part("apostol_higher", "G_n^{(1,alpha)}(x; lambda, 1, e, e) = G_n^{(alpha)}(x; lambda)", [&] {
      for (std::size_t i = 0; i < cfg.samples.size(); ++i) {
        const ParamPoint p = cfg.samples[i].base();
        for (unsigned alpha : cfg.alpha_range) {
          for (GenocchiType type : {GenocchiType::type1, GenocchiType::type2}) {
            const auto lhs = detail::polys_of(detail::genocchi_spec(type, 1, alpha), p, cfg.order);
            const auto rhs =
                detail::polys_of(FamilySpec::of(FamilyTag::ApostolGenocchiHigher, 1, alpha), p, cfg.order);
            const std::string ctx = detail::type_label(type) + ", " + detail::where(i, p, 1, alpha);
            if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, ctx)) return w;
          }
        }
      }
      return Witness{};
    }));
    parts.push_back(plain_part("classical_higher", "G_n^{(1,alpha)}(x; 1, 1, e, e) = G_n^{(alpha)}(x)", [&] {
      for (unsigned alpha : cfg.alpha_range) {
        const auto lhs = detail::polys_of(FamilySpec::type1(1, alpha), ParamPoint::classical(), cfg.order);
        const auto rhs = detail::polys_of(FamilySpec::of(FamilyTag::ClassicalGenocchiHigher, 1, alpha),
                                          ParamPoint::classical(), cfg.order);
        if (auto w = compare_polys(lhs, rhs, cfg.inject_fault, "alpha=" + std::to_string(alpha))) return w;
      }
      return Witness{};
    }));
  });
}

inline CheckResult check_combinatorics(const CheckConfig& cfg) {
  constexpr std::size_t kStirlingRows = 20;
  constexpr std::size_t kPowerOrder = 8;
  return detail::timed("combinatorics.stirling_tables", "Stirling tables and series powers", [&](auto& parts) {
    parts.push_back(plain_part("stirling2_series", "(e^t - 1)^m / m! = sum_n S2(n,m) t^n/n!", [&] {
      const auto e1 = ps_exp_linear(1, kStirlingRows) - ScalarSeries::one(kStirlingRows);
      for (std::size_t m = 0; m <= kStirlingRows; ++m) {
        const auto power = ps_ipow(e1, static_cast<unsigned>(m));
        std::vector<Rational> lhs, rhs;
        for (std::size_t n = 0; n <= kStirlingRows; ++n) {
          lhs.push_back(Rational(stirling2(n, m)));
          rhs.push_back(power[n] * Rational(factorial(n)) / Rational(factorial(m)));
        }
        if (auto w = compare_scalars(lhs, rhs, cfg.inject_fault, "m=" + std::to_string(m))) return w;
      }
      return Witness{};
    }));
    parts.push_back(plain_part("stirling1_series", "log(1+t)^m / m! = sum_n s(n,m) t^n/n!", [&] {
      const auto log1p = log1p_outer(kStirlingRows);
      for (std::size_t m = 0; m <= kStirlingRows; ++m) {
        const auto power = ps_ipow(log1p, static_cast<unsigned>(m));
        std::vector<Rational> lhs, rhs;
        for (std::size_t n = 0; n <= kStirlingRows; ++n) {
          lhs.push_back(Rational(stirling1_signed(n, m)));
          rhs.push_back(power[n] * Rational(factorial(n)) / Rational(factorial(m)));
        }
        if (auto w = compare_scalars(lhs, rhs, cfg.inject_fault, "m=" + std::to_string(m))) return w;
      }
      return Witness{};
    }));
    parts.push_back(plain_part("power_multinomial", "(sum c_n t^n/n!)^alpha = sum_n (sum multinomial prod c) t^n/n!", [&] {
      std::mt19937_64 rng(cfg.seed);
      for (unsigned alpha = 0; alpha <= 3; ++alpha) {
        std::vector<Rational> c;
        ScalarSeries f(kPowerOrder);
        for (std::size_t n = 0; n <= kPowerOrder; ++n) {
          c.push_back(detail::small_rational(rng, 5));
          f.set(n, c.back() / Rational(factorial(n)));
        }
        const auto power = ps_ipow(f, alpha);
        const auto expected = detail::multinomial_power(c, alpha, kPowerOrder);
        std::vector<Rational> lhs;
        for (std::size_t n = 0; n <= kPowerOrder; ++n) lhs.push_back(power[n] * Rational(factorial(n)));
        if (auto w = compare_scalars(lhs, expected, cfg.inject_fault, "alpha=" + std::to_string(alpha))) return w;
      }
      return Witness{};
    }));
  });
}

}  // namespace genocchi

#endif  // GENOCCHI_VERIFIER_CHECKS_HPP
