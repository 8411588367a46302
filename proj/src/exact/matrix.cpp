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

#include "qinv/exact/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qinv {

ScalarVector zero_vector(const CycField* field, int n) { return ScalarVector(n, CycScalar(field)); }

ScalarVector unit_vector(const CycField* field, int n, int i) {
  ScalarVector v = zero_vector(field, n);
  v[i] = CycScalar(field, 1L);
  return v;
}

ScalarMatrix::ScalarMatrix(const CycField* field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, CycScalar(field)) {}

ScalarMatrix ScalarMatrix::identity(const CycField* field, int n) {
  ScalarMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = CycScalar(field, 1L);
  return m;
}

ScalarVector ScalarMatrix::row(int i) const {
  return ScalarVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

ScalarVector ScalarMatrix::col(int j) const {
  ScalarVector v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix ScalarMatrix::inverse() const {
  if (rows_ != cols_) throw ArithmeticError("inverse of non-square matrix");
  const int n = rows_;
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(field_, n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) throw ArithmeticError("singular matrix");
    if (piv != c) {
      for (int k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(c, k));
        std::swap(inv(piv, k), inv(c, k));
      }
    }
    CycScalar s = a(c, c).inverse();
    for (int k = 0; k < n; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      CycScalar f = a(r, c);
      for (int k = 0; k < n; ++k) {
        a(r, k).sub_mul(f, a(c, k));
        inv(r, k).sub_mul(f, inv(c, k));
      }
    }
  }
  return inv;
}

CycScalar ScalarMatrix::det() const {
  if (rows_ != cols_) throw ArithmeticError("determinant of non-square matrix");
  const int n = rows_;
  ScalarMatrix a = *this;
  CycScalar d(field_, 1L);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return CycScalar(field_);
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      d = -d;
    }
    d *= a(c, c);
    CycScalar s = a(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      CycScalar f = a(r, c) * s;
      for (int k = c; k < n; ++k) a(r, k).sub_mul(f, a(c, k));
    }
  }
  return d;
}

CycScalar ScalarMatrix::trace() const {
  CycScalar t(field_);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

int ScalarMatrix::rank() const {
  ScalarMatrix a = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = r;
    while (piv < rows_ && a(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    for (int k = 0; k < cols_; ++k) std::swap(a(piv, k), a(r, k));
    CycScalar s = a(r, c).inverse();
    for (int i = r + 1; i < rows_; ++i) {
      if (a(i, c).is_zero()) continue;
      CycScalar f = a(i, c) * s;
      for (int k = c; k < cols_; ++k) a(i, k).sub_mul(f, a(r, k));
    }
    ++r;
  }
  return r;
}

bool ScalarMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const CycScalar& v = (*this)(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

ScalarVector ScalarMatrix::apply(const ScalarVector& v) const {
  ScalarVector out = zero_vector(field_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) out[i].add_mul((*this)(i, j), v[j]);
  return out;
}

ScalarVector ScalarMatrix::apply_left(const ScalarVector& v) const {
  ScalarVector out = zero_vector(field_, cols_);
  for (int i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) out[j].add_mul(v[i], (*this)(i, j));
  }
  return out;
}

std::string ScalarMatrix::key() const {
  std::ostringstream os;
  for (const auto& v : data_) {
    for (const auto& c : v.coords()) os << c.get_str() << ',';
    os << ';';
  }
  return os.str();
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw ArithmeticError("matrix shape mismatch");
  ScalarMatrix c(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j).add_mul(aik, b(k, j));
    }
  return c;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix c = a;
  for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace qinv
