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
#include <vector>

#include "qinv/exact/cyclotomic.hpp"

namespace qinv {

using ScalarVector = std::vector<CycScalar>;

ScalarVector zero_vector(const CycField* field, int n);
ScalarVector unit_vector(const CycField* field, int n, int i);

/// Small dense matrix over Q(zeta_M); used for group elements and coordinate changes.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(const CycField* field, int rows, int cols);

  static ScalarMatrix identity(const CycField* field, int n);

  const CycField* field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycScalar& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const CycScalar& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  ScalarVector row(int i) const;
  ScalarVector col(int j) const;

  ScalarMatrix transpose() const;
  /// Throws ArithmeticError when singular.
  ScalarMatrix inverse() const;
  CycScalar det() const;
  CycScalar trace() const;
  int rank() const;
  bool is_identity() const;

  ScalarVector apply(const ScalarVector& v) const;
  /// Row vector times matrix.
  ScalarVector apply_left(const ScalarVector& v) const;

  /// Canonical serialization used for deduplication.
  std::string key() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  const CycField* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycScalar> data_;
};

}  // namespace qinv
