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

#ifndef GENOCCHI_ERRORS_HPP
#define GENOCCHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace genocchi {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GENOCCHI_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

/// A textual rational or parameter could not be parsed.
GENOCCHI_DEFINE_ERROR(ParseError);
/// Series division by a series whose lowest coefficient is not a unit.
GENOCCHI_DEFINE_ERROR(DivisionByNonUnit);
/// Series division where the numerator vanishes to lower order.
GENOCCHI_DEFINE_ERROR(ValuationError);
/// Composition with an inner series that has a nonzero constant term.
GENOCCHI_DEFINE_ERROR(CompositionError);
/// Bivariate geometric sum of a series with nonzero constant term.
GENOCCHI_DEFINE_ERROR(GeomError);
/// A generating-function denominator is not invertible at the sample point.
GENOCCHI_DEFINE_ERROR(SingularDenominator);
/// Polylog / polyexponential order outside the supported window.
GENOCCHI_DEFINE_ERROR(RangeError);
/// Multinomial parts that do not sum to the total.
GENOCCHI_DEFINE_ERROR(PartitionError);
/// Invalid verifier configuration.
GENOCCHI_DEFINE_ERROR(ConfigError);

#undef GENOCCHI_DEFINE_ERROR

}  // namespace genocchi

#endif  // GENOCCHI_ERRORS_HPP
