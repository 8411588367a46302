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

#include "qinv/exact/mpoly.hpp"
#include "qinv/reflection/group.hpp"

namespace qinv {

/// L = sum_i f_i d/dx_i.
struct Derivation {
  std::vector<MPoly> components;

  Derivation() = default;
  explicit Derivation(std::vector<MPoly> comps);
  static Derivation zero(const CycField* field, int nvars);

  int nvars() const { return static_cast<int>(components.size()); }
  const CycField* field() const { return components.front().field(); }
  bool is_zero() const;
  /// Largest component degree; kDegreeNegInf for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// L(p) = sum_i f_i dp/dx_i.
  MPoly apply(const MPoly& p) const;
  /// Degree-d part of every component.
  Derivation homogeneous_part(int d) const;
  /// Degree-deg(L) part of every component.
  Derivation top_part() const;
  Derivation scaled(const CycScalar& c) const;
  Derivation multiplied(const MPoly& p) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend Derivation operator+(const Derivation& a, const Derivation& b);
  friend Derivation operator-(const Derivation& a, const Derivation& b);
  friend bool operator==(const Derivation& a, const Derivation& b) { return a.components == b.components; }
};

Derivation euler_field(const CycField* field, int nvars);

/// g.L = L for every group element, i.e. L(g.x_j) = g.L(x_j).
bool is_invariant_derivation(const ReflectionGroup& g, const Derivation& L);

/// Affine hyperplanes with multiplicities. Forms are stored with the first
/// nonzero linear coefficient equal to 1.
struct MultiArrangement {
  const CycField* field = nullptr;
  int nvars = 0;
  std::vector<MPoly> forms;
  std::vector<int> multiplicity;
  bool central = true;
  std::string label;

  int size() const { return static_cast<int>(forms.size()); }
  int total_multiplicity() const;
  /// prod_H alpha_H^{r(H)}
  MPoly defining_polynomial() const;
  /// Appends a form, or raises its multiplicity when a proportional form is present.
  void add(const MPoly& form, int mult = 1);
  /// Canonical text used for hashing and reports.
  std::string canonical_text() const;
};

/// Scales an affine form so that its first nonzero linear coefficient is 1.
MPoly normalize_affine_form(const MPoly& form);

/// Reflection arrangement with r(H) = m_H n_H + extra; hyperplanes with r = 0 are left out.
MultiArrangement reflection_multiarrangement(const ReflectionGroup& g, const MultFn& m, int extra);
inline MultiArrangement dm_arrangement(const ReflectionGroup& g, const MultFn& m) {
  return reflection_multiarrangement(g, m, 1);
}
inline MultiArrangement dtilde_arrangement(const ReflectionGroup& g, const MultFn& m) {
  return reflection_multiarrangement(g, m, 0);
}

/// (alpha, x) = j for every root and |j| <= m_alpha. Types A, B, D only.
MultiArrangement catalan_arrangement(const ReflectionGroup& g, const MultFn& m);
/// Factors of the BC_N Catalan polynomial for multiplicities (m1, m2, m3).
MultiArrangement bc_catalan(int n, int m1, int m2, int m3);
/// Homogenization by a new last variable z (printed x{N+1}), plus the hyperplane z = 0.
MultiArrangement cone(const MultiArrangement& arr);

struct MembershipWitness {
  bool ok = true;
  int hyperplane = -1;  ///< first failing hyperplane
  int exponent = 0;     ///< power of the form dividing L(form)
  int required = 0;
};

/// alpha_H^{r(H)} | L(alpha_H) for every hyperplane.
MembershipWitness derivation_member(const Derivation& L, const MultiArrangement& arr);

/// z^{deg L} L(x/z) in nvars + 1 variables, with zero d/dz component.
Derivation cone_derivation(const Derivation& L);
/// Restriction of a coned derivation to z = 1, dropping the d/dz component.
Derivation decone_derivation(const Derivation& L);

/// Affine arrangement plus candidate derivations read from a text file:
///   nvars N
///   hyperplane <affine form> [@ multiplicity]
///   derivation <f_1>, ..., <f_N>
struct ArrangementFixture {
  MultiArrangement arrangement;
  std::vector<Derivation> derivations;
};
ArrangementFixture parse_arrangement_fixture(const std::string& text, const CycField* field);
ArrangementFixture read_arrangement_fixture(const std::string& path, const CycField* field);
/// Built-in copy of the deconing counterexample x1 x2 (x1 + x2 + 1).
const std::string& deconing_fixture_text();

}  // namespace qinv
