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

#ifndef GENOCCHI_IO_HPP
#define GENOCCHI_IO_HPP

// Text encodings: JSON for configs, reports and tables, plus CSV and LaTeX
// tables. Rationals always travel as exact "p/q" strings.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genocchi/errors.hpp"
#include "genocchi/families.hpp"
#include "genocchi/rational.hpp"
#include "genocchi/verifier.hpp"

namespace genocchi {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + ": expected a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

inline Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + ": expected an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e, what));
  return out;
}

template <class Int>
std::vector<Int> integers_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + ": expected an array");
  std::vector<Int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ConfigError(what + ": expected integers");
    if constexpr (std::is_unsigned_v<Int>) {
      if (e.get<long long>() < 0) throw ConfigError(what + ": expected nonnegative integers");
    }
    out.push_back(e.get<Int>());
  }
  return out;
}

inline Json point_to_json(const ParamPoint& p) {
  return Json::array({to_string(p.lambda), to_string(p.ln_a), to_string(p.ln_b), to_string(p.ln_c)});
}

inline ParamPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ConfigError("samples: each entry must be four \"p/q\" strings");
  return {rational_from_json(j[0], "samples"), rational_from_json(j[1], "samples"),
          rational_from_json(j[2], "samples"), rational_from_json(j[3], "samples")};
}

inline Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

inline Json mismatch_to_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return Json{{"n", m->n}, {"x-degree", m->x_degree}, {"lhs", to_string(m->lhs)}, {"rhs", to_string(m->rhs)},
              {"context", m->context}};
}

inline double seconds(std::chrono::nanoseconds d) { return std::chrono::duration<double>(d).count(); }

inline std::string iso_timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t raw = std::chrono::system_clock::to_time_t(t);
  std::tm utc{};
  gmtime_r(&raw, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace detail

// ---- config ----

inline Json config_to_json(const CheckConfig& cfg) {
  Json samples = Json::array();
  for (const auto& p : cfg.samples) samples.push_back(detail::point_to_json(p));
  return Json{{"order", cfg.order},
              {"samples", samples},
              {"k_range", cfg.k_range},
              {"alpha_range", cfg.alpha_range},
              {"s_range", cfg.s_range},
              {"mu_samples", detail::rationals_to_json(cfg.mu_samples)},
              {"y_samples", detail::rationals_to_json(cfg.y_samples)},
              {"x_samples", detail::rationals_to_json(cfg.x_samples)},
              {"seed", cfg.seed},
              {"bivariate_order", cfg.bivariate_order}};
}

/// Overrides fields of `base` with the keys present in `j`. A new seed
/// without explicit samples redraws the default samples. Unknown keys and
/// wrongly typed values are ConfigErrors; malformed rationals ParseErrors.
inline CheckConfig config_from_json(const Json& j, CheckConfig base = default_config()) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "order") {
      if (!value.is_number_integer() || value.get<long long>() < 0) throw ConfigError("order: expected a nonnegative integer");
      base.order = value.get<std::size_t>();
    } else if (key == "samples") {
      if (!value.is_array()) throw ConfigError("samples: expected an array");
      base.samples.clear();
      for (const auto& p : value) base.samples.push_back(detail::point_from_json(p));
    } else if (key == "k_range") {
      base.k_range = detail::integers_from_json<int>(value, key);
    } else if (key == "alpha_range") {
      base.alpha_range = detail::integers_from_json<unsigned>(value, key);
    } else if (key == "s_range") {
      base.s_range = detail::integers_from_json<unsigned>(value, key);
    } else if (key == "mu_samples") {
      base.mu_samples = detail::rationals_from_json(value, key);
    } else if (key == "y_samples") {
      base.y_samples = detail::rationals_from_json(value, key);
    } else if (key == "x_samples") {
      base.x_samples = detail::rationals_from_json(value, key);
    } else if (key == "seed") {
      if (!value.is_number_integer()) throw ConfigError("seed: expected an integer");
      base.seed = value.get<std::uint64_t>();
      if (!j.contains("samples")) base.samples = default_samples(base.seed);
    } else if (key == "bivariate_order") {
      if (!value.is_number_integer() || value.get<long long>() < 0) throw ConfigError("bivariate_order: expected a nonnegative integer");
      base.bivariate_order = value.get<std::size_t>();
    } else {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }
  return base;
}

inline CheckConfig parse_config(const std::string& text, CheckConfig base = default_config()) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j, std::move(base));
}

// ---- report ----

inline Json part_to_json(const PartResult& p) {
  return Json{{"name", p.name},
              {"identity", p.identity},
              {"status", to_string(p.status)},
              {"variant-note", detail::optional_string(p.variant_note)},
              {"first-mismatch", detail::mismatch_to_json(p.first_mismatch)}};
}

inline Json result_to_json(const CheckResult& r, bool timings) {
  Json j{{"check-id", r.check_id},
         {"identity", r.identity},
         {"status", to_string(r.status)},
         {"variant-note", detail::optional_string(r.variant_note)},
         {"first-mismatch", detail::mismatch_to_json(r.first_mismatch)}};
  if (timings) j["elapsed"] = detail::seconds(r.elapsed);
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(part_to_json(p));
  j["parts"] = std::move(parts);
  return j;
}

/// Without timings the document depends only on the config and suite, so
/// equal inputs give byte-identical output.
inline Json report_to_json(const Report& report, bool timings = false) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(result_to_json(r, timings));
  Json ledger = Json::array();
  for (const auto& v : report.variant_ledger) {
    ledger.push_back(Json{{"check-id", v.check_id}, {"part", v.part}, {"note", v.note}});
  }
  Json j{{"suite-version", std::string(report.suite_version)},
         {"suite", std::string(suite_name(report.suite))},
         {"config", config_to_json(report.config)},
         {"results", std::move(results)},
         {"variant-ledger", std::move(ledger)},
         {"overall", report.overall_pass ? "pass" : "fail"}};
  if (timings) {
    j["elapsed"] = detail::seconds(report.elapsed);
    j["generated-at"] = detail::iso_timestamp(report.generated_at);
  }
  return j;
}

// ---- tables ----

inline std::string_view to_string(PolylogStart s) { return s == PolylogStart::from_one ? "from_one" : "from_zero"; }

inline Json expansion_to_json(const FamilyExpansion& e) {
  Json polys = Json::array();
  for (const auto& p : e.polys) polys.push_back(detail::rationals_to_json(p.coeffs()));
  return Json{{"family", std::string(tag_name(e.spec.tag))},
              {"k", e.spec.k},
              {"alpha", e.spec.alpha},
              {"mu", to_string(e.spec.mu)},
              {"polylog_start", std::string(to_string(e.spec.polylog_start))},
              {"params", Json{{"lambda", to_string(e.params.lambda)},
                              {"ln_a", to_string(e.params.ln_a)},
                              {"ln_b", to_string(e.params.ln_b)},
                              {"ln_c", to_string(e.params.ln_c)}}},
              {"order", e.order},
              {"polys", std::move(polys)}};
}

inline FamilyExpansion expansion_from_json(const Json& j) {
  try {
    FamilyExpansion e;
    const auto tag = parse_tag(j.at("family").get<std::string>());
    if (!tag) throw ParseError("unknown family " + j.at("family").dump());
    e.spec.tag = *tag;
    e.spec.k = j.at("k").get<int>();
    e.spec.alpha = j.at("alpha").get<unsigned>();
    e.spec.mu = parse_rational(j.at("mu").get<std::string>());
    const auto start = j.at("polylog_start").get<std::string>();
    if (start != "from_one" && start != "from_zero") throw ParseError("unknown polylog_start " + start);
    e.spec.polylog_start = start == "from_one" ? PolylogStart::from_one : PolylogStart::from_zero;
    const auto& params = j.at("params");
    e.params = {parse_rational(params.at("lambda").get<std::string>()),
                parse_rational(params.at("ln_a").get<std::string>()),
                parse_rational(params.at("ln_b").get<std::string>()),
                parse_rational(params.at("ln_c").get<std::string>())};
    e.order = j.at("order").get<std::size_t>();
    for (const auto& row : j.at("polys")) {
      std::vector<Rational> coeffs;
      for (const auto& c : row) coeffs.push_back(parse_rational(c.get<std::string>()));
      e.polys.emplace_back(std::move(coeffs));
    }
    if (e.polys.size() != e.order + 1) throw ParseError("polys length does not match order");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed table JSON: ") + ex.what());
  }
}

/// Header "n,deg,c0,...,cD" with D the largest degree; each row lists only
/// its own coefficients. The zero polynomial has degree -1.
inline std::string expansion_to_csv(const FamilyExpansion& e) {
  int max_degree = 0;
  for (const auto& p : e.polys) max_degree = std::max(max_degree, p.degree());
  std::ostringstream out;
  out << "n,deg";
  for (int d = 0; d <= max_degree; ++d) out << ",c" << d;
  out << '\n';
  for (std::size_t n = 0; n < e.polys.size(); ++n) {
    out << n << ',' << e.polys[n].degree();
    for (const auto& c : e.polys[n].coeffs()) out << ',' << to_string(c);
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

inline std::string latex_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1 && i > 0;
    if (!unit) out += latex_rational(c);
    if (i == 1) out += "x";
    if (i > 1) out += "x^{" + std::to_string(i) + "}";
  }
  return out;
}

}  // namespace detail

/// An align* block, one line per P_n(x), coefficients as \frac.
inline std::string expansion_to_latex(const FamilyExpansion& e) {
  std::string out = "\\begin{align*}\n";
  for (std::size_t n = 0; n < e.polys.size(); ++n) {
    out += "P_{" + std::to_string(n) + "}(x) &= " + detail::latex_poly(e.polys[n]);
    out += n + 1 < e.polys.size() ? " \\\\\n" : "\n";
  }
  out += "\\end{align*}\n";
  return out;
}

}  // namespace genocchi

#endif  // GENOCCHI_IO_HPP
