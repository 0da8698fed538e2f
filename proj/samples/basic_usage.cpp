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

// Builds a few families, prints their first polynomials and runs one check.

#include <iostream>

#include "genocchi/families.hpp"
#include "genocchi/verifier.hpp"

int main() {
  using namespace genocchi;

  // Classical Genocchi polynomials through the poly-Genocchi family.
  const auto classical = family_series(FamilySpec::type1(1, 1), ParamPoint::classical(), 6);
  for (std::size_t n = 0; n <= classical.order; ++n) {
    std::cout << "G_" << n << "(x) = " << classical.polys[n].to_string() << "\n";
  }

  // A dilogarithm kernel with lambda = 2, a = e^{1/2}, b = e^{1/3}, c = e^2.
  const ParamPoint p{2, make_rational(1, 2), make_rational(1, 3), 2};
  const auto numbers = numbers_up_to(FamilySpec::type1(2, 2), p, 5);
  std::cout << "numbers at " << p.to_string() << ":";
  for (const auto& g : numbers) std::cout << " " << to_string(g);
  std::cout << "\n";

  // One identity check on a small config.
  auto cfg = default_config(7);
  cfg.order = 8;
  const auto result = check_shift_recurrence(cfg);
  std::cout << result.check_id << ": " << to_string(result.status) << "\n";
  return result.status == Status::fail ? 1 : 0;
}
