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
#include <utility>
#include <vector>

#include "qinv/exact/kernels.hpp"
#include "qinv/reflection/group.hpp"
#include "qinv/reflection/projections.hpp"

namespace qinv {

/// Per-degree bases up to a cutoff. Homogeneous spaces hold the degree-d
/// piece at index d; filtered spaces hold a basis of the degree <= d part,
/// each level extending the previous one.
struct GradedSubspace {
  bool filtered = false;
  std::vector<std::vector<MPoly>> levels;

  int cutoff() const { return static_cast<int>(levels.size()) - 1; }
  int dim(int d) const { return static_cast<int>(levels.at(d).size()); }
  const std::vector<MPoly>& basis(int d) const { return levels.at(d); }
  std::vector<int> dimensions() const;
  /// New elements at level d (filtered) or the whole level (homogeneous).
  std::vector<MPoly> new_at(int d) const;
};

struct QuasiWitness {
  bool ok = true;
  int hyperplane = -1;  ///< first failing hyperplane
  int exponent = 0;     ///< achieved power of alpha dividing (1 - s_H)p
  int required = 0;     ///< m_H n_H
};

/// alpha_H^{m_H n_H} | (1 - s_H)p for every hyperplane.
QuasiWitness check_quasi_invariant(const ReflectionGroup& g, const MPoly& p, const MultFn& m);
inline bool is_quasi_invariant(const ReflectionGroup& g, const MPoly& p, const MultFn& m) {
  return check_quasi_invariant(g, p, m).ok;
}

/// Basis of (Q_m)_d in reduced echelon form.
std::vector<MPoly> quasi_space(const ReflectionGroup& g, const MultFn& m, int d, Exec exec = default_exec());
GradedSubspace quasi_graded(const ReflectionGroup& g, const MultFn& m, int cutoff, Exec exec = default_exec());

/// Isotypic part of (Q_m)_d for an irreducible with character chi and dimension dim.
std::vector<MPoly> quasi_isotypic(const ReflectionGroup& g, const MultFn& m, int d, const ClassFunction& chi, int dim,
                                  Exec exec = default_exec());

/// (1/N) sum_H m_H n_H
Rational cv_degree(const ReflectionGroup& g, const MultFn& m);

/// Components f_1..f_N of sum_i f_i (x) e_i.
using VectorElement = std::vector<MPoly>;

/// Q_m(V)_d from the idempotent conditions (1 (x) e_{H,i}) phi = 0 mod alpha^{m n}.
std::vector<VectorElement> vector_quasi_space(const ReflectionGroup& g, const MultFn& m, int d,
                                              Exec exec = default_exec());
/// Same space from the single condition alpha^{m n} | sum_i alpha(e_i) f_i.
std::vector<VectorElement> vector_quasi_space_reduced(const ReflectionGroup& g, const MultFn& m, int d,
                                                      Exec exec = default_exec());
bool is_vector_quasi_invariant(const ReflectionGroup& g, const VectorElement& f, const MultFn& m);

/// (form . x) divides p(x + shift) - p(x - shift).
struct ShiftCondition {
  ScalarVector form;
  ScalarVector shift;
};

/// Conditions of the trigonometric space: t = (j/2) coroot, j = 1..m_alpha.
/// Only crystallographic families (A, B, D).
std::vector<ShiftCondition> trig_conditions(const ReflectionGroup& g, const MultFn& m);
/// Conditions for BC_N with multiplicities (m1, m2, m3) on e_i, 2e_i, e_i +- e_j.
std::vector<ShiftCondition> bc_conditions(int n, int m1, int m2, int m3);
/// Field used for BC_N computations (same as the B_N group field).
const CycField* bc_field();

bool satisfies_shift_conditions(const MPoly& p, const std::vector<ShiftCondition>& conds);
/// Filtered space of polynomials of degree <= d satisfying all conditions.
GradedSubspace shift_condition_space(const CycField* field, int nvars, const std::vector<ShiftCondition>& conds, int d,
                                     Exec exec = default_exec());
GradedSubspace trig_quasi_space(const ReflectionGroup& g, const MultFn& m, int d, Exec exec = default_exec());
GradedSubspace bc_trig_quasi_space(int n, int m1, int m2, int m3, int d, Exec exec = default_exec());

/// prod_i (prod_{s<=m1}(x_i^2 - s^2) prod_{t<=m2}(x_i^2 - (t-1/2)^2)) prod_{i<j,eps} prod_{r<=m3}((x_i - eps x_j)^2 - r^2)
MPoly bc_delta_polynomial(int n, int m1, int m2, int m3);

/// p(x + scale*alpha) - p(x - scale*alpha)
MPoly delta_shift(const MPoly& p, const ScalarVector& alpha, const CycScalar& scale);

struct ChainResult {
  bool ok = true;
  int failed_step = 0;  ///< 1-based position in the chain, 0 when ok
  std::string detail;
};
/// Divided-difference form of the conditions p(x+s a) = p(x-s a) at (a,x)=0 for
/// s = 1..l and s = l+2, ..., l+2r.
ChainResult delta_chain_check(const MPoly& p, const ScalarVector& alpha, int l, int r);
/// Same conditions checked by direct shifted evaluation.
bool direct_chain_check(const MPoly& p, const ScalarVector& alpha, int l, int r);
/// (l, r) for the direction alpha = e_j / 2 in BC_N with multiplicities m1, m2.
std::pair<int, int> bc_chain_params(int m1, int m2);

/// Top-degree parts of a filtration-adapted basis, as a homogeneous space.
GradedSubspace leading_term_space(const GradedSubspace& filtered);

}  // namespace qinv
