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

#ifndef GENOCCHI_VERIFIER_HPP
#define GENOCCHI_VERIFIER_HPP

#include "genocchi/verifier/checks.hpp"
#include "genocchi/verifier/config.hpp"
#include "genocchi/verifier/result.hpp"
#include "genocchi/verifier/suite.hpp"

#endif  // GENOCCHI_VERIFIER_HPP
