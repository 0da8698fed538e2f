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

// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
// exact; the only tolerances are the wall-clock limits below.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "genocchi/io.hpp"
#include "genocchi/verifier.hpp"
#include "oracle.hpp"

namespace {

using namespace genocchi;
using Clock = std::chrono::steady_clock;

constexpr double kClassicalLimit = 1.0;
constexpr double kAppellLimit = 20.0;
constexpr double kSymmetrizedLimit = 15.0;
constexpr double kVerifyAllLimit = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const CheckResult* find(const Report& r, const std::string& id) {
  for (const auto& c : r.results) {
    if (c.check_id == id) return &c;
  }
  return nullptr;
}

const PartResult* find_part(const CheckResult& r, const std::string& name) {
  for (const auto& p : r.parts) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

bool in_ledger(const Report& r, const std::string& id, const std::string& part) {
  for (const auto& v : r.variant_ledger) {
    if (v.check_id == id && v.part == part) return true;
  }
  return false;
}

std::string status_of(const Report& r, const std::string& id) {
  const auto* c = find(r, id);
  return c ? std::string(to_string(c->status)) : "missing";
}

// 2t e^{xt} / (e^t + 1) by schoolbook division, expanded as an Appell sum.
Outcome criterion_classical() {
  Outcome o;
  const auto start = Clock::now();
  constexpr std::size_t n_max = 12;
  oracle::Coeffs num(n_max + 2, Rational(0));
  num[1] = 2;
  auto den = oracle::exp_coeffs(1, n_max + 1);
  den[0] += 1;
  const auto kernel = oracle::long_divide(num, den);
  const auto fam = family_series(FamilySpec::type1(1, 1), ParamPoint::classical(), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
      coeffs[n - i] = oracle::fact(n) / (oracle::fact(i) * oracle::fact(n - i)) * kernel[i] * oracle::fact(i);
    }
    o.require(fam.polys[n] == Poly(coeffs), "P_" + std::to_string(n) + " differs from the division oracle");
  }
  o.require(fam.polys[1] == Poly(1) && fam.polys[2] == Poly::affine(2, -1), "P_1 = 1, P_2 = 2x - 1");
  const std::vector<Rational> expected{0, 1, -1, 0, 1, 0, -3};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    o.require(fam.polys[n].constant_term() == expected[n], "number " + std::to_string(n));
  }
  const double t = seconds_since(start);
  o.require(t < kClassicalLimit, "runtime " + fmt_seconds(t));
  o.detail = "n <= 12 against series division, " + fmt_seconds(t) + " (limit 1 s)" + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome criterion_appell() {
  Outcome o;
  CheckConfig cfg = default_config(42);
  cfg.order = 12;
  bool has_lambda_zero = false, has_lc_zero = false;
  for (const auto& p : cfg.samples) {
    has_lambda_zero |= p.lambda == 0;
    has_lc_zero |= p.ln_c == 0;
  }
  o.require(cfg.samples.size() >= 5 && has_lambda_zero && has_lc_zero, "sample coverage");
  o.require(cfg.k_range == std::vector<int>{-2, -1, 0, 1, 2, 3}, "k range");
  o.require(cfg.alpha_range == std::vector<unsigned>{0, 1, 2, 3}, "alpha range");
  const auto start = Clock::now();
  const auto report = run_suite(cfg, Suite::appell);
  // The type-2 structural analogues live in the remark check.
  const auto remark = check_remark_identities(cfg);
  const double t = seconds_since(start);
  for (const auto& r : report.results) o.require(r.status == Status::pass, r.check_id + " " + std::string(to_string(r.status)));
  for (const auto* name : {"expansion", "shift", "derivative", "addition_c"}) {
    const auto* p = find_part(remark, name);
    o.require(p && p->status == Status::pass, std::string("t2 ") + name);
  }
  o.require(report.results.size() >= 6, "appell suite size");
  o.require(t < kAppellLimit, "runtime " + fmt_seconds(t));
  o.detail = std::to_string(report.results.size()) + " checks + type-2 analogues exact at n <= 12, " +
             std::to_string(cfg.samples.size()) + " points, " + fmt_seconds(t) + " (limit 20 s)" +
             (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome criterion_bernoulli(const Report& all) {
  Outcome o;
  std::size_t generic = 0;
  for (const auto& p : all.config.samples) generic += (p.lambda != 1 && p.lambda != -1) ? 1 : 0;
  o.require(generic >= 3, "fewer than 3 points with lambda not in {-1, 1}");
  for (const auto* id : {"t1.bernoulli_relation", "t2.bernoulli_relation"}) {
    o.require(status_of(all, id) == "pass", std::string(id) + " " + status_of(all, id));
  }
  o.detail = "both types pass as printed at " + std::to_string(generic) + " points with lambda^2 != 1" +
             (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome criterion_stirling(const Report& all) {
  Outcome o;
  std::string how;
  for (const auto* id : {"t1.stirling_relation", "t2.stirling_relation"}) {
    const auto* c = find(all, id);
    if (!c) {
      o.require(false, std::string(id) + " missing");
      continue;
    }
    const auto* main = find_part(*c, "stirling");
    const auto* alpha_one = find_part(*c, "alpha_one_consistency");
    o.require(main && main->status != Status::fail, std::string(id) + " has no unique passing form");
    if (main && main->status == Status::resolved_variant) {
      o.require(in_ledger(all, id, "stirling"), std::string(id) + " not in the report ledger");
    }
    o.require(alpha_one && alpha_one->status == Status::pass, std::string(id) + " d_j != c_j at alpha = 1");
    how += std::string(how.empty() ? "" : ", ") + id + " " + (main ? std::string(to_string(main->status)) : "?");
  }
  o.detail = how + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome criterion_explicit(const Report& all) {
  Outcome o;
  const auto* c = find(all, "t1.explicit_formulas");
  o.require(c != nullptr, "check missing");
  if (c) {
    for (const auto* name : {"rising_factorial", "falling_factorial"}) {
      const auto* p = find_part(*c, name);
      o.require(p && p->status == Status::pass, std::string(name) + " not exact as printed");
    }
    for (const auto* name : {"bernoulli_order_s", "frobenius"}) {
      const auto* p = find_part(*c, name);
      o.require(p && p->status == Status::resolved_variant, std::string(name) + " lacks a unique variant");
      o.require(in_ledger(all, "t1.explicit_formulas", name), std::string(name) + " not in the ledger");
    }
  }
  o.detail = "rising/falling exact, order-s Bernoulli and Frobenius formulas resolved to one variant each" +
             (o.ok ? std::string() : ": " + o.detail);
  return o;
}

Outcome criterion_symmetrized(const Report& all) {
  Outcome o;
  const auto* c = find(all, "t1.symmetrized_gf");
  o.require(c != nullptr, "check missing");
  double t = 0;
  if (c) {
    t = std::chrono::duration<double>(c->elapsed).count();
    o.require(c->status == Status::resolved_variant, "no unique balancing convention");
    o.require(in_ledger(all, "t1.symmetrized_gf", "double_gf"), "not in the ledger");
  }
  o.require(std::min(all.config.order, all.config.bivariate_order) >= 8, "orders below (8, 8)");
  o.require(all.config.samples.size() >= 2, "fewer than 2 points");
  o.require(t < kSymmetrizedLimit, "runtime " + fmt_seconds(t));
  o.detail = "orders (8, 8) at " + std::to_string(all.config.samples.size()) + " points, one convention, " +
             fmt_seconds(t) + " (limit 15 s)" + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome criterion_combinatorics(const Report& all) {
  Outcome o;
  o.require(status_of(all, "combinatorics.stirling_tables") == "pass", "combinatorics check failed");
  o.detail = "Stirling tables n <= 20, series powers alpha <= 3, n <= 8" + (o.ok ? std::string() : ": " + o.detail);
  return o;
}

Outcome criterion_remark(const Report& all) {
  Outcome o;
  const auto* c = find(all, "t2.remark_identities");
  o.require(c != nullptr && c->parts.size() == 8, "expected eight identities");
  std::size_t resolved = 0;
  if (c) {
    for (const auto& p : c->parts) {
      o.require(p.status != Status::fail, p.name + " fails");
      resolved += p.status == Status::resolved_variant ? 1 : 0;
    }
  }
  o.detail = std::to_string(c ? c->parts.size() - resolved : 0) + " exact, " + std::to_string(resolved) +
             " variant-resolved" + (o.ok ? "" : ": " + o.detail);
  return o;
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(GENOCCHI_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_engineering() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "genocchi_acceptance_a.json";
  const auto b = dir / "genocchi_acceptance_b.json";
  double worst = 0;
  for (const auto& path : {a, b}) {
    const auto start = Clock::now();
    const int code = run_cli("verify --suite all --seed 42 --out " + path.string());
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    o.require(code == 0, "verify exit code " + std::to_string(code));
    o.require(t <= kVerifyAllLimit, "runtime " + fmt_seconds(t));
  }
  const auto ja = slurp(a);
  o.require(!ja.empty() && ja == slurp(b), "reports differ between runs");
  std::filesystem::remove(a);
  std::filesystem::remove(b);

  CheckConfig cfg = default_config(42);
  cfg.order = 4;
  cfg.inject_fault = true;
  std::size_t caught = 0;
  for (const auto& entry : check_registry()) {
    const auto r = entry.run(cfg);
    bool all_parts = true;
    for (const auto& p : r.parts) all_parts &= p.status == Status::fail;
    if (r.status == Status::fail && r.first_mismatch && all_parts) {
      ++caught;
    } else {
      o.require(false, "fault not detected by " + r.check_id);
    }
  }
  o.detail = "byte-identical reports, slowest run " + fmt_seconds(worst) + " (limit 60 s), fault caught by " +
             std::to_string(caught) + "/" + std::to_string(check_registry().size()) + " checks" +
             (o.ok ? "" : ": " + o.detail);
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report_line = [&](int id, const char* name, const Outcome& o) {
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << std::endl;
    failures += o.ok ? 0 : 1;
  };
  auto guarded = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    try {
      report_line(id, name, fn());
    } catch (const std::exception& e) {
      report_line(id, name, Outcome{false, std::string("exception: ") + e.what()});
    }
  };

  guarded(1, "classical reduction", criterion_classical);
  guarded(2, "Appell identities", criterion_appell);

  Report all;
  try {
    all = run_suite(default_config(42), Suite::all);
  } catch (const std::exception& e) {
    std::cout << "FAIL default suite did not run: " << e.what() << std::endl;
    return 1;
  }
  guarded(3, "Bernoulli relations", [&] { return criterion_bernoulli(all); });
  guarded(4, "Stirling relations", [&] { return criterion_stirling(all); });
  guarded(5, "explicit formulas", [&] { return criterion_explicit(all); });
  guarded(6, "symmetrized generating function", [&] { return criterion_symmetrized(all); });
  guarded(7, "combinatorics", [&] { return criterion_combinatorics(all); });
  guarded(8, "type-2 analogues", [&] { return criterion_remark(all); });
  guarded(9, "engineering", criterion_engineering);

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
