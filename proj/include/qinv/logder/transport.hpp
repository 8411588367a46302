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

#include <vector>

#include "qinv/logder/freeness.hpp"
#include "qinv/quasi/quasi.hpp"

namespace qinv {

/// Equivariant map V* -> S(V*) obtained by averaging x_slot -> p:
/// phi(x_j) = sum_w w_{j,slot} (w.p).
VectorElement equivariant_tuple(const ReflectionGroup& g, const MPoly& p, int slot = 0, Exec exec = default_exec());
/// phi(g.x_j) = g.phi(x_j) for all j and all reflections.
bool is_equivariant_tuple(const ReflectionGroup& g, const VectorElement& phi);

/// Basis of Hom_W(V*, (Q_m)_d) as tuples (phi(x_1), ..., phi(x_N)).
std::vector<VectorElement> hom_space(const ReflectionGroup& g, const MultFn& m, int d, Exec exec = default_exec());

/// Theta(phi) = sum_i phi(x_i) d_i; throws std::logic_error unless the result is an
/// invariant member of D_m.
Derivation theta_from_hom(const ReflectionGroup& g, const MultFn& m, const VectorElement& phi);
/// Theta^{-1}(L)(x_k) = L(x_k).
VectorElement theta_inverse(const Derivation& L);
/// rho(sum f_i (x) e_i) = sum f_i d_i; throws std::logic_error unless it lies in the D-tilde module.
Derivation rho_from_vector_quasi(const ReflectionGroup& g, const MultFn& m, const VectorElement& phi);

/// Degree-d invariant fields of D_m and degree-d fields of the D-tilde module.
std::vector<Derivation> dm_invariant_fields(const ReflectionGroup& g, const MultFn& m, int d,
                                            Exec exec = default_exec());
std::vector<Derivation> dtilde_fields(const ReflectionGroup& g, const MultFn& m, int d, Exec exec = default_exec());

FreenessCertificate certify_dm(const ReflectionGroup& g, const MultFn& m, Exec exec = default_exec());
FreenessCertificate certify_dtilde(const ReflectionGroup& g, const MultFn& m, Exec exec = default_exec());

/// Exponents minus c_V(m); their sum is the number of hyperplanes.
std::vector<Rational> appearance_degrees(const ReflectionGroup& g, const MultFn& m, const std::vector<int>& exponents);

/// L^{(k)} = sum_i f_i^{(k)} d_i with f_i^{(k)} = sum_j int_{x_i}^{x_j} t^k prod_s (t - x_s)^m dt,
/// k = 0..n-1, in n+1 ambient coordinates.
std::vector<Derivation> symmetric_integral_basis(int n, int m);
/// Restriction of an ambient field tangent to sum x = 0 onto that hyperplane,
/// using x_1..x_n as coordinates.
Derivation restrict_to_sum_zero(const Derivation& ambient);
/// Braid arrangement on sum x = 0 in the coordinates above, every r(H) = mult.
MultiArrangement sum_zero_braid_arrangement(int n, int mult);

/// Invariant fields with components in a W-stable filtered space, one per new basis element.
std::vector<Derivation> invariant_fields_from_filtered(const ReflectionGroup& g, const GradedSubspace& space,
                                                       Exec exec = default_exec());
/// Invariant Catalan fields whose leading terms form a D_m basis.
std::vector<Derivation> catalan_basis(const ReflectionGroup& g, const MultFn& m, int cutoff,
                                      Exec exec = default_exec());
/// Same for BC_N with (m1, m2, m3); the group is B_N.
std::vector<Derivation> bc_catalan_basis(const ReflectionGroup& b_group, int m1, int m2, int m3, int cutoff,
                                         Exec exec = default_exec());

struct DiagramEntry {
  Derivation field;
  MPoly via_quasi;       ///< top part of delta(field)
  MPoly via_derivation;  ///< delta(top part of field)
  bool commutes = false;
  bool top_in_dm = false;      ///< Phi(field) is in D_m
  bool top_quasi = false;      ///< gr(delta(field)) is in Q_m
};
struct DiagramReport {
  std::vector<DiagramEntry> entries;
  bool all_commute() const;
};
/// Checks gr(delta(L)) = delta(Phi(L)) on the Catalan fields given.
DiagramReport diagram_check(const ReflectionGroup& g, const MultFn& m, const std::vector<Derivation>& fields,
                            const ScalarVector& delta);
/// Builds catalan_basis up to the cutoff and runs diagram_check with delta = x_1.
DiagramReport diagram_check(const ReflectionGroup& g, const MultFn& m, int cutoff, Exec exec = default_exec());

}  // namespace qinv
