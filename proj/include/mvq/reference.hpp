// Copyright 2026 The mvq Authors.
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

// Published low-complexity values and the self-consistency suite run by
// `--check` and `check-all`.

#ifndef MVQ_REFERENCE_HPP_
#define MVQ_REFERENCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mvq/exact.hpp"

namespace mvq {

struct ReferenceRow {
  int g, n;
  PiRational volume;
  Rational c_area_times_pi2_over_3;
  Rational lambda_plus;
};

const std::vector<ReferenceRow>& reference_table();
std::optional<ReferenceRow> reference_row(int g, int n);

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Reference values when tabulated, plus: boundary formula against the
// graph sum, odd exponents in every graph polynomial, string and dilaton
// equations on the correlator cache.
std::vector<CheckLine> check_stratum(int g, int n);

}  // namespace mvq

#endif  // MVQ_REFERENCE_HPP_
