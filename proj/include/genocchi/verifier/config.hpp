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

#ifndef GENOCCHI_VERIFIER_CONFIG_HPP
#define GENOCCHI_VERIFIER_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "genocchi/errors.hpp"
#include "genocchi/kernels.hpp"
#include "genocchi/rational.hpp"

namespace genocchi {

/// Everything a verification run depends on. Two runs with equal configs
/// produce identical results.
struct CheckConfig {
  std::size_t order = 16;
  std::vector<ParamPoint> samples;
  std::vector<int> k_range{-2, -1, 0, 1, 2, 3};
  std::vector<unsigned> alpha_range{0, 1, 2, 3};
  std::vector<unsigned> s_range{1, 2};
  std::vector<Rational> mu_samples{Rational(-1), make_rational(1, 2)};
  std::vector<Rational> y_samples{Rational(0), make_rational(1, 2), make_rational(-3, 2)};
  std::vector<Rational> x_samples{Rational(0), make_rational(1, 3), Rational(-2)};
  std::uint64_t seed = 42;
  /// Per-variable cap for the bivariate (t, u) grid.
  std::size_t bivariate_order = 8;
  /// Self-test mode: every comparison perturbs one right-hand coefficient.
  bool inject_fault = false;

  friend bool operator==(const CheckConfig&, const CheckConfig&) = default;
};

namespace detail {

// Small-height rational from the raw generator output. Plain modular
// reduction keeps the stream identical across standard libraries.
inline Rational small_rational(std::mt19937_64& rng, int height = 3) {
  const auto span = static_cast<std::uint64_t>(2 * height + 1);
  const long num = static_cast<long>(rng() % span) - height;
  const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(height)) + 1;
  return make_rational(num, den);
}

}  // namespace detail

/// Five points: the classical point (1, 0, 1, 1), a lambda = 0 point, an
/// ln c = 0 point, and two generic points. Random coordinates come from
/// the seed; lambda avoids {-1, 1} and ln a + ln b avoids {0, 1} outside
/// the classical point.
inline std::vector<ParamPoint> default_samples(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto generic = [&rng](bool lambda_free, bool lc_free) {
    for (;;) {
      ParamPoint p{detail::small_rational(rng), detail::small_rational(rng), detail::small_rational(rng),
                   detail::small_rational(rng)};
      if (!lambda_free) p.lambda = 0;
      if (!lc_free) p.ln_c = 0;
      if (p.lambda == 1 || p.lambda == -1) continue;
      if (p.ln_a == 0 || p.ln_ab() == 0 || p.ln_ab() == 1) continue;
      if (lc_free && (p.ln_c == 0 || p.ln_c == 1)) continue;
      return p;
    }
  };
  std::vector<ParamPoint> points;
  points.push_back(ParamPoint::classical());
  points.push_back(generic(false, true));
  points.push_back(generic(true, false));
  points.push_back(generic(true, true));
  points.push_back(generic(true, true));
  return points;
}

inline CheckConfig default_config(std::uint64_t seed = 42) {
  CheckConfig cfg;
  cfg.seed = seed;
  cfg.samples = default_samples(seed);
  return cfg;
}

/// Throws ConfigError describing the first violated constraint.
inline void validate(const CheckConfig& cfg) {
  if (cfg.order < 1) throw ConfigError("order must be at least 1");
  if (cfg.samples.empty()) throw ConfigError("samples must not be empty");
  for (const auto& p : cfg.samples) {
    if (1 + p.lambda == 0) throw ConfigError("sample " + p.to_string() + " has 1 + lambda = 0");
    if (p.ln_ab() == 0) throw ConfigError("sample " + p.to_string() + " has ln a + ln b = 0");
  }
  if (cfg.k_range.empty()) throw ConfigError("k_range must not be empty");
  for (int k : cfg.k_range) {
    if (std::abs(k) > kMaxPolyOrder) throw ConfigError("k = " + std::to_string(k) + " outside [-16, 16]");
  }
  if (cfg.alpha_range.empty()) throw ConfigError("alpha_range must not be empty");
  if (cfg.s_range.empty()) throw ConfigError("s_range must not be empty");
  if (cfg.mu_samples.empty()) throw ConfigError("mu_samples must not be empty");
  for (const auto& mu : cfg.mu_samples) {
    if (mu == 1) throw ConfigError("mu = 1 is not allowed");
  }
  if (cfg.y_samples.empty()) throw ConfigError("y_samples must not be empty");
  if (cfg.x_samples.empty()) throw ConfigError("x_samples must not be empty");
  if (cfg.bivariate_order < 1 || cfg.bivariate_order > 8) {
    throw ConfigError("bivariate_order must lie in [1, 8]");
  }
}

}  // namespace genocchi

#endif  // GENOCCHI_VERIFIER_CONFIG_HPP
