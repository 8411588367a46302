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

#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qinv/exact/mpoly.hpp"
#include "qinv/reflection/group.hpp"

namespace qinv::testing {

/// Small random element: integer coordinates in [-range, range], occasionally halved.
inline CycScalar random_scalar(const CycField* f, std::mt19937_64& rng, int range = 4) {
  std::uniform_int_distribution<int> coord(-range, range);
  std::uniform_int_distribution<int> den(1, 2);
  Coords c(f->degree());
  for (auto& v : c) v = Rational(coord(rng), den(rng));
  return CycScalar(f, std::move(c));
}

inline MPoly random_poly(const CycField* f, int nvars, int max_degree, int max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<Term> terms;
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    int d = deg(rng);
    std::vector<int> e(nvars, 0);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    terms.push_back({Monomial::from_exponents(e), random_scalar(f, rng, 3)});
  }
  return MPoly::from_terms(f, nvars, std::move(terms));
}

inline const ReflectionGroup& cached_group(const std::string& tag) {
  static std::map<std::string, ReflectionGroup> groups;
  auto it = groups.find(tag);
  if (it == groups.end()) it = groups.emplace(tag, ReflectionGroup::build(parse_group_tag(tag))).first;
  return it->second;
}

/// License block written at the top of golden files; leading '#' lines are not compared.
inline constexpr const char* kGoldenHeader =
    "# Copyright 2026 The qinv Authors\n"
    "#\n"
    "# Licensed under the Apache License, Version 2.0 (the \"License\");\n"
    "# you may not use this file except in compliance with the License.\n"
    "# You may obtain a copy of the License at\n"
    "#\n"
    "#     http://www.apache.org/licenses/LICENSE-2.0\n"
    "#\n"
    "# Unless required by applicable law or agreed to in writing, software\n"
    "# distributed under the License is distributed on an \"AS IS\" BASIS,\n"
    "# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n"
    "# See the License for the specific language governing permissions and\n"
    "# limitations under the License.\n";

/// Compares text with a stored golden file; QINV_UPDATE_GOLDEN=1 rewrites it instead.
inline void check_golden(const std::string& dir, const std::string& name, const std::string& text) {
  const std::string path = dir + "/" + name;
  if (const char* upd = std::getenv("QINV_UPDATE_GOLDEN"); upd && std::string(upd) == "1") {
    std::ofstream(path) << kGoldenHeader << text;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::string line, body;
  bool header = true;
  while (std::getline(in, line)) {
    if (header && !line.empty() && line[0] == '#') continue;
    header = false;
    body += line + "\n";
  }
  CHECK(body == text);
}

}  // namespace qinv::testing

namespace doctest {
template <>
struct StringMaker<qinv::MPoly> {
  static String convert(const qinv::MPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<qinv::CycScalar> {
  static String convert(const qinv::CycScalar& c) { return c.to_string().c_str(); }
};
}  // namespace doctest
