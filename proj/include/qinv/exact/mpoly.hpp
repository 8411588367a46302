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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qinv/exact/cyclotomic.hpp"
#include "qinv/exact/matrix.hpp"
#include "qinv/exact/monomial.hpp"

namespace qinv {

/// Degree of the zero polynomial.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

struct Term {
  Monomial mono;
  CycScalar coef;
};

/// Sparse multivariate polynomial over Q(zeta_M). Terms are kept in
/// descending graded-lex order with no zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const CycField* field, int nvars);

  static MPoly constant(const CycField* field, int nvars, const CycScalar& c);
  static MPoly constant(const CycField* field, int nvars, long c);
  static MPoly variable(const CycField* field, int nvars, int i);
  static MPoly monomial(const CycField* field, int nvars, Monomial m, const CycScalar& c);
  /// sum_i coeffs[i] x_i + constant.
  static MPoly linear_form(const ScalarVector& coeffs, const std::optional<CycScalar>& constant = std::nullopt);
  /// Sorts, merges and drops zeros.
  static MPoly from_terms(const CycField* field, int nvars, std::vector<Term> terms);

  const CycField* field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// kDegreeNegInf for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  int degree_in(int var) const;

  CycScalar coefficient(Monomial m) const;
  const Term& leading_term() const { return terms_.front(); }
  CycScalar zero_scalar() const { return CycScalar(field_); }

  MPoly homogeneous_part(int d) const;
  /// Highest-degree homogeneous component (zero for zero).
  MPoly top_part() const;
  /// Divides by the leading coefficient.
  MPoly monic() const;
  /// Linear coefficients of a degree <= 1 polynomial.
  ScalarVector linear_coefficients() const;
  CycScalar constant_term() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const CycScalar& c);
  MPoly operator-() const;
  MPoly pow(int e) const;
  /// this += c * x^m * o
  void add_scaled(const MPoly& o, const CycScalar& c, Monomial m = Monomial());

  MPoly partial(int var) const;
  /// sum_i dir[i] dp/dx_i.
  MPoly directional(const ScalarVector& dir) const;
  /// Antiderivative in one variable with zero constant of integration.
  MPoly integrate(int var) const;

  /// p(T x + t).
  MPoly subst_linear(const ScalarMatrix& t_mat, const std::optional<ScalarVector>& shift = std::nullopt) const;
  /// x_i -> images[i]; images share a field and variable count.
  MPoly substitute(const std::vector<MPoly>& images) const;
  MPoly substitute_var(int var, const MPoly& value) const;
  CycScalar evaluate(const ScalarVector& point) const;

  /// Same polynomial viewed in more (or fewer, when unused) variables.
  MPoly with_nvars(int nvars) const;
  /// x_i -> x_{perm[i]}.
  MPoly permute_vars(const std::vector<int>& perm, int nvars) const;
  /// Conjugates the coefficients.
  MPoly conj_coefficients() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const CycScalar& c) { return a *= c; }
  friend MPoly operator*(const CycScalar& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  void check_compatible(const MPoly& o) const;

  const CycField* field_ = nullptr;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

std::vector<std::string> default_var_names(int nvars);

/// Result of testing divisibility by the k-th power of an affine form.
struct DivisionResult {
  std::optional<MPoly> quotient;
  /// Largest j <= k with alpha^j | p (equals k when divisible).
  int max_exponent = 0;
  bool divisible() const { return quotient.has_value(); }
};

/// Divides p by alpha^k where alpha has degree exactly one (constant term allowed).
/// Works by an invertible affine change of coordinates making alpha a coordinate.
DivisionResult poly_div_linear_power(const MPoly& p, const MPoly& alpha, int k);

/// Largest e with alpha^e | p (p nonzero).
int linear_multiplicity(const MPoly& p, const MPoly& alpha);

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q);

/// p(T x + t); free-function form.
MPoly poly_subst_linear(const MPoly& p, const ScalarMatrix& t_mat, const std::optional<ScalarVector>& shift = std::nullopt);
/// Directional derivative; free-function form.
MPoly poly_partial(const MPoly& p, const ScalarVector& direction);

/// Repeated substitution x_i -> images[i] with cached powers of the images.
/// prepare() grows the cache; apply() is const and safe to call concurrently
/// once the cache covers every exponent that occurs.
class PowerCache {
 public:
  PowerCache() = default;
  explicit PowerCache(std::vector<MPoly> images);

  void prepare(int max_degree);
  MPoly apply(const MPoly& p) const;
  /// Image of a single monomial (requires prepared degree).
  MPoly apply(Monomial m) const;
  const MPoly& power(int var, int e) const { return powers_[var][e]; }
  int prepared_degree() const { return prepared_; }
  const std::vector<MPoly>& images() const { return images_; }

 private:
  std::vector<MPoly> images_;
  std::vector<std::vector<MPoly>> powers_;
  int prepared_ = -1;
};

}  // namespace qinv
