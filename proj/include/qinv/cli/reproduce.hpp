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

#include <string>
#include <vector>

#include "qinv/exact/kernels.hpp"
#include "qinv/logder/derivation.hpp"
#include "qinv/reflection/group.hpp"

namespace qinv {

struct ReproRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Reproduction {
  std::string id;
  std::vector<ReproRow> rows;
  bool pass() const;
  /// "row <name> PASS|FAIL <detail>" per row, then "verdict ...".
  std::string to_text() const;
};

/// ex-g312, ex-i26, ex-bc2. Throws std::invalid_argument for other ids.
Reproduction reproduce_example(const std::string& id, Exec exec = default_exec());
std::vector<std::string> example_ids();

/// Multiplicity with value `on` on the orbit of the hyperplane alpha = 0 and `off` elsewhere.
MultFn mult_on_orbit_of(const ReflectionGroup& g, const MPoly& alpha, int on, int off);

/// Span of inv * gen over invariants inv of complementary degree, in degree d.
std::vector<MPoly> invariant_module_span(const ReflectionGroup& g, const std::vector<MPoly>& gens, int d,
                                         Exec exec = default_exec());
/// Same for tuples, with polynomial (or only invariant) coefficients.
std::vector<std::vector<MPoly>> tuple_module_span(const ReflectionGroup& g,
                                                  const std::vector<std::vector<MPoly>>& gens, int d,
                                                  bool invariant_coefficients, Exec exec = default_exec());
bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b);
bool same_tuple_span(const std::vector<std::vector<MPoly>>& a, const std::vector<std::vector<MPoly>>& b);

}  // namespace qinv
