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

#include "qinv/exact/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qinv {

namespace {

// Exact division of integer polynomials (low to high), divisor monic.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() <= dn) return {};
  std::vector<mpz_class> q(num.size() - dn);
  for (size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int conductor) {
  if (conductor < 1) throw ArithmeticError("conductor must be positive");
  // x^M - 1 = prod_{d | M} Phi_d
  std::vector<mpz_class> num(conductor + 1);
  num[0] = -1;
  num[conductor] = 1;
  for (int d = 1; d < conductor; ++d) {
    if (conductor % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  }
  return num;
}

CycField::CycField(int conductor) : conductor_(conductor) {
  modulus_ = cyclotomic_polynomial(conductor);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  powers_.resize(conductor);
  Coords cur(degree_);
  cur[0] = 1;
  for (int k = 0; k < conductor; ++k) {
    powers_[k] = cur;
    // multiply by z: shift up, fold the top coordinate through Phi_M
    Coords next(degree_);
    Rational top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < degree_; ++i) {
      if (top != 0) next[i] -= top * Rational(modulus_[i]);
    }
    cur = std::move(next);
  }
}

const CycField* CycField::get(int conductor) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycField>> registry;
  if (conductor < 1) throw ArithmeticError("conductor must be positive");
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CycField(conductor));
  return slot.get();
}

const Coords& CycField::power(int k) const {
  k %= conductor_;
  if (k < 0) k += conductor_;
  return powers_[k];
}

CycScalar::CycScalar(const CycField* field) : field_(field), c_(field->degree()) {}

CycScalar::CycScalar(const CycField* field, const Rational& value) : field_(field), c_(field->degree()) {
  c_[0] = value;
  c_[0].canonicalize();
}

CycScalar::CycScalar(const CycField* field, long value) : field_(field), c_(field->degree()) {
  c_[0] = value;
}

CycScalar::CycScalar(const CycField* field, Coords coords) : field_(field), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != field->degree()) throw ArithmeticError("coordinate count does not match field degree");
  for (auto& v : c_) v.canonicalize();
}

CycScalar CycScalar::root(const CycField* field, long k) {
  long m = field->conductor();
  long r = ((k % m) + m) % m;
  return CycScalar(field, field->power(static_cast<int>(r)));
}

void CycScalar::check_same(const CycScalar& o) const {
  if (field_ != o.field_) {
    throw ArithmeticError("conductor mismatch: " + std::to_string(field_ ? field_->conductor() : 0) + " vs " +
                          std::to_string(o.field_ ? o.field_->conductor() : 0));
  }
}

bool CycScalar::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const Rational& CycScalar::rational() const {
  if (!is_rational()) throw ArithmeticError("scalar is not rational: " + to_string());
  return c_[0];
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

void CycScalar::reduce_product(const std::vector<Rational>& full) {
  const int n = field_->degree();
  for (int i = 0; i < n; ++i) c_[i] = full[i];
  for (int k = n; k < static_cast<int>(full.size()); ++k) {
    if (full[k] == 0) continue;
    const Coords& p = field_->power(k);
    for (int i = 0; i < n; ++i)
      if (p[i] != 0) c_[i] += full[k] * p[i];
  }
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  check_same(o);
  const int n = field_->degree();
  if (n == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> full(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (o.c_[j] != 0) full[i + j] += c_[i] * o.c_[j];
  }
  reduce_product(full);
  return *this;
}

void CycScalar::add_mul(const CycScalar& b, const CycScalar& c) {
  if (field_->degree() == 1) {
    check_same(b);
    check_same(c);
    c_[0] += b.c_[0] * c.c_[0];
    return;
  }
  *this += b * c;
}

void CycScalar::sub_mul(const CycScalar& b, const CycScalar& c) {
  if (field_->degree() == 1) {
    check_same(b);
    check_same(c);
    c_[0] -= b.c_[0] * c.c_[0];
    return;
  }
  *this -= b * c;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  const int n = field_->degree();
  if (n == 1) return CycScalar(field_, 1 / c_[0]);
  // Solve (multiplication-by-this matrix) * x = e_0.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  CycScalar col = *this;
  CycScalar z = root(field_, 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) a[i][j] = col.c_[i];
    col *= z;
  }
  a[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (int k = c; k <= n; ++k) a[c][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Coords x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return CycScalar(field_, std::move(x));
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  check_same(o);
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (field_->degree() == 1) {
    c_[0] /= o.c_[0];
    return *this;
  }
  return *this *= o.inverse();
}

CycScalar CycScalar::conj() const {
  const int n = field_->degree();
  if (n == 1) return *this;
  CycScalar r(field_);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    const Coords& p = field_->power(-i);
    for (int k = 0; k < n; ++k)
      if (p[k] != 0) r.c_[k] += c_[i] * p[k];
  }
  return r;
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(field_, 1L);
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

mpz_class CycScalar::denominator() const {
  mpz_class d = 1;
  for (const auto& v : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

std::string CycScalar::to_string() const {
  if (is_rational()) return c_.empty() ? "0" : c_[0].get_str();
  mpz_class d = denominator();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class num = c_[i].get_num() * (d / c_[i].get_den());
    bool neg = num < 0;
    mpz_class mag = neg ? mpz_class(-num) : num;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  os << ")";
  if (d != 1) os << "/" << d.get_str();
  return os.str();
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  a.check_same(b);
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

bool canonical_less(const CycScalar& a, const CycScalar& b) {
  for (size_t i = 0; i < a.coords().size(); ++i) {
    int c = cmp(a.coords()[i], b.coords()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace qinv
