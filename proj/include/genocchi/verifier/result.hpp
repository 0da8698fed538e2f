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

#ifndef GENOCCHI_VERIFIER_RESULT_HPP
#define GENOCCHI_VERIFIER_RESULT_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genocchi/poly.hpp"
#include "genocchi/rational.hpp"

namespace genocchi {

enum class Status { pass, fail, resolved_variant };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::resolved_variant: return "resolved-variant";
  }
  return "fail";
}

/// Smallest witness of a failed comparison: coefficient of x^x_degree in
/// the n-th term, with both sides and where it happened.
struct Mismatch {
  std::size_t n = 0;
  std::size_t x_degree = 0;
  Rational lhs;
  Rational rhs;
  std::string context;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// One identity inside a check.
struct PartResult {
  std::string name;
  std::string identity;
  Status status = Status::pass;
  std::optional<std::string> variant_note;
  std::optional<Mismatch> first_mismatch;

  friend bool operator==(const PartResult&, const PartResult&) = default;
};

struct CheckResult {
  std::string check_id;
  /// The identity under test, written out as a formula.
  std::string identity;
  Status status = Status::pass;
  std::optional<std::string> variant_note;
  std::optional<Mismatch> first_mismatch;
  std::chrono::nanoseconds elapsed{0};
  std::vector<PartResult> parts;
};

/// Status, note and witness of a check follow from its parts: any failing
/// part fails the check, otherwise any resolved part marks it resolved.
inline void aggregate(CheckResult& r) {
  r.status = Status::pass;
  r.first_mismatch.reset();
  r.variant_note.reset();
  std::string notes;
  for (const auto& part : r.parts) {
    if (part.status == Status::fail) {
      r.status = Status::fail;
      if (!r.first_mismatch && part.first_mismatch) {
        r.first_mismatch = part.first_mismatch;
        r.first_mismatch->context = part.name + ": " + r.first_mismatch->context;
      }
    } else if (part.status == Status::resolved_variant && r.status == Status::pass) {
      r.status = Status::resolved_variant;
    }
    if (part.variant_note) {
      if (!notes.empty()) notes += "; ";
      notes += part.name + ": " + *part.variant_note;
    }
  }
  if (!notes.empty()) r.variant_note = std::move(notes);
}

using Witness = std::optional<Mismatch>;

/// Coefficientwise comparison of lhs[n] and rhs[n] for every n, walking n
/// and then the x-degree upwards so the first difference is the smallest
/// witness. With inject_fault the constant term of rhs[0] is bumped by one.
inline Witness compare_polys(std::span<const Poly> lhs, std::span<const Poly> rhs, bool inject_fault,
                             const std::string& context) {
  if (lhs.size() != rhs.size()) {
    return Mismatch{std::min(lhs.size(), rhs.size()), 0, Rational(0), Rational(0),
                    context + " (length " + std::to_string(lhs.size()) + " vs " +
                        std::to_string(rhs.size()) + ")"};
  }
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    Poly right = rhs[n];
    if (inject_fault && n == 0) right += Poly(1);
    if (lhs[n] == right) continue;
    const auto width = static_cast<std::size_t>(std::max(lhs[n].degree(), right.degree()) + 1);
    for (std::size_t d = 0; d < width; ++d) {
      if (lhs[n].coeff(d) != right.coeff(d)) return Mismatch{n, d, lhs[n].coeff(d), right.coeff(d), context};
    }
  }
  return std::nullopt;
}

inline Witness compare_scalars(std::span<const Rational> lhs, std::span<const Rational> rhs, bool inject_fault,
                               const std::string& context) {
  std::vector<Poly> l(lhs.begin(), lhs.end());
  std::vector<Poly> r(rhs.begin(), rhs.end());
  return compare_polys(l, r, inject_fault, context);
}

inline std::string describe(const Mismatch& m) {
  return "n=" + std::to_string(m.n) + ", x^" + std::to_string(m.x_degree) + ": lhs " + to_string(m.lhs) +
         " vs rhs " + to_string(m.rhs) + " at " + m.context;
}

/// A part with a single reading.
inline PartResult plain_part(std::string name, std::string identity, const std::function<Witness()>& evaluate) {
  PartResult part;
  part.name = std::move(name);
  part.identity = std::move(identity);
  part.first_mismatch = evaluate();
  part.status = part.first_mismatch ? Status::fail : Status::pass;
  return part;
}

/// Printed reading first (index 0). If it fails, every alternative is
/// evaluated over the whole sample set; exactly one survivor resolves the
/// part, anything else leaves it failing with the printed witness.
inline PartResult resolve_variants(std::string name, std::string identity, const std::vector<std::string>& variants,
                                   const std::function<Witness(std::size_t)>& evaluate) {
  PartResult part;
  part.name = std::move(name);
  part.identity = std::move(identity);
  part.first_mismatch = evaluate(0);
  if (!part.first_mismatch) {
    part.status = Status::pass;
    return part;
  }
  std::vector<std::size_t> survivors;
  for (std::size_t v = 1; v < variants.size(); ++v) {
    if (!evaluate(v)) survivors.push_back(v);
  }
  const std::string printed = "printed form (" + variants[0] + ") fails: " + describe(*part.first_mismatch);
  if (survivors.size() == 1) {
    part.status = Status::resolved_variant;
    part.variant_note = printed + "; holds with " + variants[survivors[0]];
    part.first_mismatch.reset();
    return part;
  }
  part.status = Status::fail;
  if (survivors.empty()) {
    part.variant_note = printed + "; no listed variant holds";
  } else {
    std::string names;
    for (std::size_t v : survivors) names += (names.empty() ? "" : ", ") + variants[v];
    part.variant_note = printed + "; ambiguous, several variants hold: " + names;
  }
  return part;
}

}  // namespace genocchi

#endif  // GENOCCHI_VERIFIER_RESULT_HPP
