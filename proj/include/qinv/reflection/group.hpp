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

#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qinv/exact/matrix.hpp"
#include "qinv/exact/mpoly.hpp"

namespace qinv {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family {
  kA,               ///< symmetric group S_{N+1} in essential coordinates u_i = x_i - x_{N+1}
  kSymmetricAmbient,  ///< S_{N+1} permuting N+1 coordinates (not essential)
  kB,
  kD,
  kDihedral,        ///< I2(k), real form
  kDihedralComplex, ///< I2(k) in coordinates (z, zbar)
  kComplexMonomial, ///< G(r,1,N)
  kCustom,
};

struct GroupSpec {
  Family family = Family::kA;
  int rank = 2;
  int k = 0;  ///< dihedral order parameter
  int r = 0;  ///< G(r,1,N) parameter
  int conductor = 0;  ///< custom groups only
  std::vector<ScalarMatrix> generators;  ///< custom groups only
  std::string label;

  static GroupSpec type_a(int n) { return {Family::kA, n, 0, 0, 0, {}, "A" + std::to_string(n)}; }
  static GroupSpec symmetric_ambient(int n) { return {Family::kSymmetricAmbient, n + 1, 0, 0, 0, {}, "S" + std::to_string(n + 1)}; }
  static GroupSpec type_b(int n) { return {Family::kB, n, 0, 0, 0, {}, "B" + std::to_string(n)}; }
  static GroupSpec type_d(int n) { return {Family::kD, n, 0, 0, 0, {}, "D" + std::to_string(n)}; }
  static GroupSpec dihedral(int k) { return {Family::kDihedral, 2, k, 0, 0, {}, "I2(" + std::to_string(k) + ")"}; }
  static GroupSpec dihedral_complex(int k) { return {Family::kDihedralComplex, 2, k, 0, 0, {}, "I2(" + std::to_string(k) + ")c"}; }
  static GroupSpec complex_monomial(int r, int n) {
    return {Family::kComplexMonomial, n, 0, r, 0, {}, "G(" + std::to_string(r) + ",1," + std::to_string(n) + ")"};
  }
};

struct Hyperplane {
  MPoly alpha;            ///< normalized linear form (first nonzero coefficient 1)
  ScalarVector covector;  ///< coefficients of alpha
  ScalarVector coroot;    ///< s_H = I - coroot * covector
  int generator = -1;     ///< element index of s_H
  int order = 2;          ///< n_H
  int orbit = -1;
};

/// Finite complex reflection group enumerated as explicit matrices acting on V.
/// Polynomials in x_1..x_N are functions on V and g acts by (g.p)(x) = p(g^{-1} x).
/// Immutable after build apart from internal caches, which are thread-safe.
class ReflectionGroup {
 public:
  static constexpr int kDefaultOrderCap = 10000;

  static ReflectionGroup build(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

  const GroupSpec& spec() const { return spec_; }
  const std::string& label() const { return spec_.label; }
  int rank() const { return rank_; }
  const CycField* field() const { return field_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const ScalarMatrix& element(int g) const { return elements_[g]; }
  const std::vector<ScalarMatrix>& elements() const { return elements_; }
  int inverse(int g) const { return inverse_[g]; }
  int index_of(const ScalarMatrix& m) const;
  int product(int g, int h) const;
  const CycScalar& det(int g) const { return det_[g]; }
  const CycScalar& trace(int g) const { return trace_[g]; }

  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int num_orbits() const { return static_cast<int>(orbits_.size()); }
  int reflection_count() const;
  /// Hermitian/bilinear form used for roots; identity except in type A.
  const ScalarMatrix& gram() const { return gram_; }
  /// Index of the hyperplane with this (unnormalized) covector, or -1.
  int find_hyperplane(const ScalarVector& covector) const;

  /// (g.p)(x) = p(g^{-1} x).
  MPoly act(int g, const MPoly& p) const;
  /// Substitution images x_i -> (g^{-1} x)_i.
  const std::vector<MPoly>& action_images(int g) const { return images_[g]; }

  /// Coefficients (low to high) of det(I - t g), cached.
  const ScalarVector& char_poly(int g) const { return charpoly_[g]; }

  MPoly zero() const { return MPoly(field_, rank_); }
  MPoly one() const { return MPoly::constant(field_, rank_, 1L); }
  MPoly var(int i) const { return MPoly::variable(field_, rank_, i); }

 private:
  struct ActionCache;

  void enumerate(const std::vector<ScalarMatrix>& generators, int order_cap);
  void find_hyperplanes(const std::vector<ScalarMatrix>& generators);

  GroupSpec spec_;
  int rank_ = 0;
  const CycField* field_ = nullptr;
  std::vector<ScalarMatrix> elements_;
  std::vector<int> inverse_;
  std::vector<CycScalar> det_;
  std::vector<CycScalar> trace_;
  std::vector<std::vector<MPoly>> images_;
  std::vector<ScalarVector> charpoly_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<int>> orbits_;
  ScalarMatrix gram_;
  std::unordered_map<std::string, int> index_;
  std::shared_ptr<ActionCache> cache_;
};

/// Normalizes a nonzero covector so its first nonzero entry is 1.
ScalarVector normalize_covector(const ScalarVector& v);

/// Multiplicity function: one value per hyperplane orbit.
struct MultFn {
  std::vector<int> per_orbit;

  static MultFn constant(const ReflectionGroup& g, int m) { return {std::vector<int>(g.num_orbits(), m)}; }
  int at(const ReflectionGroup& g, int hyperplane) const { return per_orbit.at(g.hyperplanes()[hyperplane].orbit); }
  bool is_zero() const;
  std::string to_string() const;
};

/// sum_H m_H n_H
int weighted_hyperplane_sum(const ReflectionGroup& g, const MultFn& m);

/// Parses "--m" values: a single integer (constant) or a comma list per orbit.
MultFn parse_mult(const ReflectionGroup& g, const std::string& text);

/// Builds from a family tag such as "A2", "B3", "D4", "I2(6)", "G3_1_2", "G(3,1,2)".
/// Missing numbers in the tag ("B", "I2") are taken from rank and k.
GroupSpec parse_group_tag(const std::string& tag, int rank = 0, int k = 0);
/// Group description file: lines "family <tag>" or "conductor M", "rank N",
/// "generator" followed by N rows of scalars; '#' starts a comment.
GroupSpec read_group_file(const std::string& path);

/// Root data for real groups: root vector, coroot 2a/(a,a) and the form (a, x).
struct RootDatum {
  int hyperplane = -1;
  ScalarVector root;
  ScalarVector coroot;
  ScalarVector form;
};
/// One positive root per hyperplane, scaled so that the form is the normalized covector.
std::vector<RootDatum> root_data(const ReflectionGroup& g);

}  // namespace qinv
