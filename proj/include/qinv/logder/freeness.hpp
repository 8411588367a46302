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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qinv/logder/derivation.hpp"

namespace qinv {

struct FreenessCertificate {
  std::string label;
  uint64_t arrangement_hash = 0;
  std::vector<int> multiplicities;
  int target_degree = 0;  ///< sum of multiplicities
  std::vector<Derivation> basis;
  std::vector<int> exponents;  ///< sorted component degrees of the basis
  MPoly determinant;
  CycScalar scalar;  ///< det / prod alpha^r when that quotient is constant
  MPoly residual;    ///< quotient left after dividing out the arrangement
  bool pass = false;
  std::string reason;

  int exponent_sum() const;
};

/// 64-bit FNV-1a of the arrangement's canonical text.
uint64_t arrangement_hash(const MultiArrangement& arr);

/// Saito's criterion: fields in D(arr), det(theta_i(x_j)) = c * prod alpha_H^{r(H)}, c != 0.
FreenessCertificate saito_certificate(const MultiArrangement& arr, const std::vector<Derivation>& fields);

/// Per-degree candidates; each call returns a spanning set of the degree-d piece.
using DerivationSource = std::function<std::vector<Derivation>(int degree)>;

/// Greedy homogeneous generator choice: at each degree keep the candidates that are
/// independent of the polynomial multiples of earlier choices, until nvars are found.
/// The choice is then certified.
FreenessCertificate free_basis(const MultiArrangement& arr, const DerivationSource& source, int min_degree,
                               int max_degree);

/// Chooses nvars fields whose top-degree parts are independent over the polynomial ring,
/// scanning candidates by degree. Returns fewer when the candidates run out.
std::vector<Derivation> select_by_leading_terms(const std::vector<Derivation>& candidates, int count);

inline FreenessCertificate affine_free_check(const MultiArrangement& arr, const std::vector<Derivation>& fields) {
  return saito_certificate(arr, fields);
}
/// Cones the arrangement and the fields and appends the Euler field.
FreenessCertificate coned_free_check(const MultiArrangement& arr, const std::vector<Derivation>& fields);

/// Line-oriented key/value text; stable for a fixed certificate.
std::string serialize_certificate(const FreenessCertificate& cert);

}  // namespace qinv
