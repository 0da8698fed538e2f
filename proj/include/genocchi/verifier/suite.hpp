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

#ifndef GENOCCHI_VERIFIER_SUITE_HPP
#define GENOCCHI_VERIFIER_SUITE_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "genocchi/verifier/checks.hpp"
#include "genocchi/verifier/config.hpp"
#include "genocchi/verifier/result.hpp"

namespace genocchi {

inline constexpr std::string_view kSuiteVersion = "1.0.0";

enum class Suite { all, appell, bernoulli, stirling, symmetrized, type2 };

inline constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuiteNames{{
    {Suite::all, "all"},
    {Suite::appell, "appell"},
    {Suite::bernoulli, "bernoulli"},
    {Suite::stirling, "stirling"},
    {Suite::symmetrized, "symmetrized"},
    {Suite::type2, "type2"},
}};

inline std::string_view suite_name(Suite s) {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "all";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [suite, name_] : kSuiteNames) {
    if (name_ == name) return suite;
  }
  return std::nullopt;
}

struct CheckEntry {
  std::string_view id;
  std::vector<Suite> suites;  // besides Suite::all
  std::function<CheckResult(const CheckConfig&)> run;
};

/// Every check, sorted by id.
inline const std::vector<CheckEntry>& check_registry() {
  using S = Suite;
  using T = GenocchiType;
  static const std::vector<CheckEntry> registry{
      {"classical.reduction", {S::appell}, check_classical_reduction},
      {"combinatorics.stirling_tables", {S::stirling}, check_combinatorics},
      {"t1.appell", {S::appell}, check_appell},
      {"t1.base_reduction", {S::appell}, [](const CheckConfig& c) { return check_base_reduction(c, T::type1); }},
      {"t1.bernoulli_relation", {S::bernoulli},
       [](const CheckConfig& c) { return check_bernoulli_relation(c, T::type1); }},
      {"t1.expansion_in_numbers", {S::appell}, check_expansion_in_numbers},
      {"t1.explicit_formulas", {S::stirling}, check_explicit_formulas},
      {"t1.shift_recurrence", {S::appell}, check_shift_recurrence},
      {"t1.stirling_relation", {S::stirling},
       [](const CheckConfig& c) { return check_stirling_relation(c, T::type1); }},
      {"t1.symmetrized_gf", {S::symmetrized}, check_symmetrized_gf},
      {"t2.base_reduction", {S::appell, S::type2},
       [](const CheckConfig& c) { return check_base_reduction(c, T::type2); }},
      {"t2.bernoulli_relation", {S::bernoulli, S::type2},
       [](const CheckConfig& c) { return check_bernoulli_relation(c, T::type2); }},
      {"t2.remark_identities", {S::type2}, check_remark_identities},
      {"t2.stirling_relation", {S::stirling, S::type2},
       [](const CheckConfig& c) { return check_stirling_relation(c, T::type2); }},
  };
  return registry;
}

inline bool in_suite(const CheckEntry& e, Suite s) {
  return s == Suite::all || std::find(e.suites.begin(), e.suites.end(), s) != e.suites.end();
}

/// One line of the resolved-variant ledger.
struct VariantRecord {
  std::string check_id;
  std::string part;
  std::string note;

  friend bool operator==(const VariantRecord&, const VariantRecord&) = default;
};

struct Report {
  std::string suite_version{kSuiteVersion};
  Suite suite = Suite::all;
  CheckConfig config;
  std::vector<CheckResult> results;
  std::vector<VariantRecord> variant_ledger;
  bool overall_pass = true;
  std::chrono::nanoseconds elapsed{0};
  std::chrono::system_clock::time_point generated_at;
};

/// Validates cfg (ConfigError), runs the selected checks on up to `jobs`
/// threads and assembles the report in check-id order.
inline Report run_suite(const CheckConfig& cfg, Suite suite = Suite::all, unsigned jobs = 1) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  std::vector<const CheckEntry*> selected;
  for (const auto& e : check_registry()) {
    if (in_suite(e, suite)) selected.push_back(&e);
  }

  std::vector<CheckResult> results(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        results[i] = selected[i]->run(cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Report report;
  report.suite = suite;
  report.config = cfg;
  report.results = std::move(results);
  for (const auto& r : report.results) {
    if (r.status == Status::fail) report.overall_pass = false;
    for (const auto& part : r.parts) {
      if (part.status == Status::resolved_variant) report.variant_ledger.push_back({r.check_id, part.name, *part.variant_note});
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  report.generated_at = std::chrono::system_clock::now();
  return report;
}

}  // namespace genocchi

#endif  // GENOCCHI_VERIFIER_SUITE_HPP
