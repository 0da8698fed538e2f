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

// genocchi: coefficient tables, number sequences and the identity verifier.
//
// Exit codes: 0 ok, 1 verification failed, 2 bad arguments or config,
// 3 singular denominator, 4 output not writable.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "genocchi/families.hpp"
#include "genocchi/io.hpp"
#include "genocchi/verifier.hpp"

namespace {

using namespace genocchi;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;
constexpr int kExitOutput = 4;

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family = "type1";
  int k = 1;
  unsigned alpha = 1;
  std::string lambda = "1";
  std::string ln_a = "0";
  std::string ln_b = "1";
  std::string ln_c = "1";
  std::string mu = "-1";
  std::string polylog_start = "from_one";
  std::size_t n_max = 10;
  std::string out;

  void attach(CLI::App& cmd) {
    cmd.add_option("--family", family, "family tag")->check(CLI::IsMember(tag_names()))->capture_default_str();
    cmd.add_option("--k", k, "polylogarithm index")->capture_default_str();
    cmd.add_option("--alpha", alpha, "order")->capture_default_str();
    cmd.add_option("--lambda", lambda, "lambda as p/q")->capture_default_str();
    cmd.add_option("--ln-a", ln_a, "ln a as p/q")->capture_default_str();
    cmd.add_option("--ln-b", ln_b, "ln b as p/q")->capture_default_str();
    cmd.add_option("--ln-c", ln_c, "ln c as p/q")->capture_default_str();
    cmd.add_option("--mu", mu, "Frobenius parameter as p/q")->capture_default_str();
    cmd.add_option("--polylog-start", polylog_start, "polylogarithm sum start")
        ->check(CLI::IsMember({"from_one", "from_zero"}))
        ->capture_default_str();
    cmd.add_option("--n-max", n_max, "largest n")->capture_default_str();
    cmd.add_option("--out", out, "output file (default: standard output)");
  }

  FamilySpec spec() const {
    FamilySpec s{*parse_tag(family), k, alpha, parse_rational(mu)};
    s.polylog_start = polylog_start == "from_zero" ? PolylogStart::from_zero : PolylogStart::from_one;
    return s;
  }

  ParamPoint point() const {
    return {parse_rational(lambda), parse_rational(ln_a), parse_rational(ln_b), parse_rational(ln_c)};
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open " + path + " for writing");
  file << text;
  file.close();
  if (!file) throw OutputError("cannot write " + path);
}

int cmd_table(const FamilyArgs& args, const std::string& format) {
  const auto expansion = family_series(args.spec(), args.point(), args.n_max);
  if (format == "csv") {
    emit(args.out, expansion_to_csv(expansion));
  } else if (format == "json") {
    emit(args.out, expansion_to_json(expansion).dump(2) + "\n");
  } else {
    emit(args.out, expansion_to_latex(expansion));
  }
  return kExitOk;
}

int cmd_numbers(const FamilyArgs& args) {
  const auto numbers = numbers_up_to(args.spec(), args.point(), args.n_max);
  std::string text;
  for (std::size_t n = 0; n < numbers.size(); ++n) text += std::to_string(n) + "," + to_string(numbers[n]) + "\n";
  emit(args.out, text);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::size_t> order;
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string out;
  bool timings = false;
  bool inject_fault = false;
  unsigned jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int cmd_verify(const VerifyArgs& args) {
  CheckConfig cfg = default_config(args.seed.value_or(42));
  bool explicit_samples = false;
  if (!args.config.empty()) {
    const auto text = read_file(args.config);
    cfg = parse_config(text, cfg);
    explicit_samples = Json::parse(text).contains("samples");
  }
  if (args.order) cfg.order = *args.order;
  if (args.seed) {
    cfg.seed = *args.seed;
    if (!explicit_samples) cfg.samples = default_samples(cfg.seed);
  }
  cfg.inject_fault = args.inject_fault;
  validate(cfg);

  // Fail on an unwritable report path before the suite runs.
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary);
    if (!file) throw OutputError("cannot open " + args.out + " for writing");
  }

  const auto report = run_suite(cfg, *parse_suite(args.suite), args.jobs);
  const std::string json = report_to_json(report, args.timings).dump(2) + "\n";

  std::ostream& summary = args.out.empty() ? std::cerr : std::cout;
  for (const auto& r : report.results) {
    summary << r.check_id << " " << to_string(r.status);
    if (r.variant_note) summary << " " << *r.variant_note;
    if (r.status == Status::fail && r.first_mismatch) summary << " [" << describe(*r.first_mismatch) << "]";
    summary << "\n";
  }
  summary << "overall " << (report.overall_pass ? "pass" : "fail") << "\n";
  if (args.out.empty()) {
    std::cout << json;
  } else {
    file << json;
    file.close();
    if (!file) throw OutputError("cannot write " + args.out);
  }
  return report.overall_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apostol-type poly-Genocchi polynomials: tables and identity verification"};
  app.require_subcommand(1);

  FamilyArgs table_args;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "coefficient table of P_0(x) .. P_N(x)");
  table_args.attach(*table);
  table->add_option("--format", format, "csv, json or latex")
      ->check(CLI::IsMember({"csv", "json", "latex"}))
      ->capture_default_str();

  FamilyArgs number_args;
  auto* numbers = app.add_subcommand("numbers", "values P_n(0) for n = 0 .. N");
  number_args.attach(*numbers);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the identity checks and write a JSON report");
  verify->add_option("--suite", verify_args.suite, "check selection")
      ->check(CLI::IsMember({"all", "appell", "bernoulli", "stirling", "symmetrized", "type2"}))
      ->capture_default_str();
  verify->add_option("--order", verify_args.order, "largest n compared");
  verify->add_option("--seed", verify_args.seed, "sampling seed");
  verify->add_option("--config", verify_args.config, "JSON file overriding the default config");
  verify->add_option("--out", verify_args.out, "report file (default: standard output)");
  verify->add_flag("--timings", verify_args.timings, "include elapsed times and a timestamp in the report");
  verify->add_flag("--inject-fault", verify_args.inject_fault, "perturb every comparison (self-test)");
  verify->add_option("--jobs", verify_args.jobs, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_args, format);
    if (*numbers) return cmd_numbers(number_args);
    return cmd_verify(verify_args);
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutput;
  } catch (const SingularDenominator& e) {
    std::cerr << "error: singular denominator: " << e.what() << "\n";
    return kExitSingular;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
