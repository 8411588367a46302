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

#include "qinv/exact/kernels.hpp"
#include "qinv/reflection/group.hpp"

namespace qinv {

/// Values of a class function, indexed by element.
using ClassFunction = std::vector<CycScalar>;

/// chi_{V*}(g) = tr(g^{-1})
ClassFunction vstar_character(const ReflectionGroup& g);
ClassFunction trivial_character(const ReflectionGroup& g);
/// g -> det(g)^power
ClassFunction det_character(const ReflectionGroup& g, int power);

/// Element-wise g.p for every element, in element order.
std::vector<MPoly> orbit_images(const ReflectionGroup& g, const MPoly& p, Exec exec = default_exec());

/// W-average of p.
MPoly reynolds(const ReflectionGroup& g, const MPoly& p, Exec exec = default_exec());

/// (dim/|W|) sum_w chi(w^{-1}) w.p
MPoly isotypic_project(const ReflectionGroup& g, const MPoly& p, const ClassFunction& chi, int dim,
                       Exec exec = default_exec());
MPoly vstar_project(const ReflectionGroup& g, const MPoly& p, Exec exec = default_exec());

/// sum_{u < n_H} det(s_H^u)^i s_H^u.p; requires 1 <= i < n_H.
MPoly idempotent_apply(const ReflectionGroup& g, int hyperplane, int i, const MPoly& p);

/// Multiplicity of the irreducible with character chi in S^d V*, for d = 0..max_degree.
std::vector<Rational> molien_multiplicities(const ReflectionGroup& g, const ClassFunction& chi, int max_degree);
/// dim (S^d V*)^W for d = 0..max_degree.
std::vector<int> invariant_dimensions(const ReflectionGroup& g, int max_degree);

/// Basis of the degree-d invariants in reduced echelon form.
std::vector<MPoly> invariant_space(const ReflectionGroup& g, int d, Exec exec = default_exec());

}  // namespace qinv
