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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qinv/logder/transport.hpp"

namespace qinv {

class PrimitiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Homogeneous generators of the invariant ring, sorted by degree.
struct BasicInvariants {
  std::vector<MPoly> ys;
  std::vector<int> degrees;
  MPoly jacobian;  ///< det(d y_i / d x_j)
  CycScalar jacobian_scalar;  ///< jacobian / prod alpha_H^{n_H - 1}
  /// Signed cofactors of the last row of S, so that det S(p) = sum_j cofactor_j * d_j p.
  std::vector<MPoly> cofactors;
  bool top_unique = false;

  int top_degree() const { return degrees.back(); }
  std::string report() const;
};

/// Degrees come from the Molien series; at each new degree the candidates are the
/// invariant basis elements taken by ascending leading monomial, kept when they are
/// independent of products of earlier generators.
BasicInvariants basic_invariants(const ReflectionGroup& g, Exec exec = default_exec());
/// Validates a user-supplied choice; throws PrimitiveError when it is not a set of basic invariants.
BasicInvariants basic_invariants_from(const ReflectionGroup& g, std::vector<MPoly> ys);

struct PrimitiveResult {
  std::optional<MPoly> value;
  MPoly numerator;  ///< det S(p)
  MPoly remainder;  ///< nonzero exactly when J does not divide the numerator
};

/// D = J^{-1} det S applied to p, S having rows d y_i / d x_j (i < N) and a last row of d_j.
/// Throws PrimitiveError when the top degree is repeated.
PrimitiveResult primitive_apply(const BasicInvariants& bi, const MPoly& p);
/// Throws PrimitiveError when the result is not a polynomial.
MPoly primitive_value(const BasicInvariants& bi, const MPoly& p);

/// Componentwise D on a derivation.
Derivation nabla_D(const BasicInvariants& bi, const Derivation& field);

struct NablaInverse {
  std::optional<Derivation> field;
  int source_dim = 0;   ///< dim of the source graded piece
  int image_rank = 0;   ///< rank of nabla_D on it
  std::string status;
};
/// Solves nabla_D(L) = target with L an invariant member of D_{m+1} of degree
/// deg(target) + deg y_N. Reports instead of throwing when no unique solution exists.
NablaInverse nabla_D_inverse(const ReflectionGroup& g, const BasicInvariants& bi, const MultFn& m,
                             const Derivation& target, Exec exec = default_exec());

/// m + delta on every orbit; throws std::invalid_argument on a negative entry.
MultFn shifted(const MultFn& m, int delta);

struct PrimitiveRankRow {
  int degree = 0;
  int source_dim = 0;  ///< dim (Q_m^{V*})_d
  int target_dim = 0;  ///< dim (Q_{m-1}^{V*})_{d - deg y_N}
  int rank = 0;
  bool lands_in_target = true;  ///< every image is quasi-invariant for m - 1
};
/// D restricted to the V*-isotypic parts, degree by degree up to the cutoff.
std::vector<PrimitiveRankRow> primitive_rank_table(const ReflectionGroup& g, const BasicInvariants& bi,
                                                   const MultFn& m, int cutoff, Exec exec = default_exec());

/// Indices i for which the dihedral q_i^{(m)} lie in the reflection-representation part:
/// {1, 2l-1} for even |m|, {l-1, l+1} for odd |m|.
std::vector<int> dihedral_index_set(int ell, int total_mult);
/// The multiplicity on I2(2l) in complex coordinates: m1 on the orbit of z = zbar, m2 on the other.
MultFn dihedral_mult(const ReflectionGroup& g, int m1, int m2);
/// The unique quasi-invariant sum_s a_s z^{(|m|-s)l+i} zbar^{ls} with a_0 = 1, and its conjugate.
/// The group is I2(2l) in complex coordinates. Throws std::invalid_argument for i outside the index set,
/// PrimitiveError when the solution is missing or not unique.
std::pair<MPoly, MPoly> dihedral_q(const ReflectionGroup& g, int m1, int m2, int i);
/// y1 = z zbar, y2 = (z^{2l} + zbar^{2l}) / (2l).
BasicInvariants dihedral_basic_invariants(const ReflectionGroup& g);

}  // namespace qinv
