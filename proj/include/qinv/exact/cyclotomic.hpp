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

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace qinv {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Coords = boost::container::small_vector<Rational, 4>;

/// The cyclotomic field Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1},
/// where z = exp(2 pi i / M). Fields are interned: one instance per conductor
/// lives for the whole process, so pointer equality is field equality.
class CycField {
 public:
  static const CycField* get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  /// Monic minimal polynomial Phi_M, coefficients low to high.
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  /// Power-basis coordinates of z^k for 0 <= k < M.
  const Coords& power(int k) const;

 private:
  explicit CycField(int conductor);

  int conductor_;
  int degree_;
  std::vector<mpz_class> modulus_;
  std::vector<Coords> powers_;
};

/// Integer coefficients of the M-th cyclotomic polynomial, low to high.
std::vector<mpz_class> cyclotomic_polynomial(int conductor);

/// Element of Q(zeta_M). Always stored reduced modulo Phi_M.
class CycScalar {
 public:
  CycScalar() = default;
  explicit CycScalar(const CycField* field);
  CycScalar(const CycField* field, const Rational& value);
  CycScalar(const CycField* field, long value);
  CycScalar(const CycField* field, Coords coords);

  /// z^k for any integer k.
  static CycScalar root(const CycField* field, long k);

  const CycField* field() const { return field_; }
  const Coords& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value when is_rational(); throws otherwise.
  const Rational& rational() const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar operator-() const;

  /// a += b * c without a temporary.
  void add_mul(const CycScalar& b, const CycScalar& c);
  void sub_mul(const CycScalar& b, const CycScalar& c);

  CycScalar inverse() const;
  /// Complex conjugate: z -> z^{-1}.
  CycScalar conj() const;
  CycScalar pow(long e) const;

  /// Canonical text form: "3/4" for rationals, "(a0 + a1*z + ...)/d" otherwise.
  std::string to_string() const;
  /// Lowest common denominator of the coordinates.
  mpz_class denominator() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }
  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

 private:
  void check_same(const CycScalar& o) const;
  void reduce_product(const std::vector<Rational>& full);

  const CycField* field_ = nullptr;
  Coords c_;
};

/// Stable comparison used only for canonical ordering (coordinates, lexicographic).
bool canonical_less(const CycScalar& a, const CycScalar& b);

}  // namespace qinv
