// Copyright 2026 The qinv Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/exact/mpoly.hpp"

namespace qinv {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the canonical polynomial text (and any expression built from
/// + - * / ^, parentheses, integers, variables and the root of unity `z`).
/// Division is allowed by constants only. Variable names default to x1..xn.
MPoly parse_poly(std::string_view text, const CycField* field, int nvars, const std::vector<std::string>& names = {});

/// Scalar in the same syntax, e.g. "3/4" or "(1 + 2*z)/3".
CycScalar parse_scalar(std::string_view text, const CycField* field);

}  // namespace qinv
