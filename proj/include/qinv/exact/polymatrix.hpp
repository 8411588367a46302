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

#include "qinv/exact/mpoly.hpp"

namespace qinv {

/// Dense matrix of polynomials sharing one field and variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const CycField* field, int nvars, int rows, int cols);
  /// Rows given as vectors of equal length.
  static PolyMatrix from_rows(const std::vector<std::vector<MPoly>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  const CycField* field() const { return field_; }

  MPoly& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const MPoly& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  PolyMatrix minor(int skip_row, int skip_col) const;

 private:
  const CycField* field_ = nullptr;
  int nvars_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MPoly> data_;
};

/// Cofactor expansion up to size 4, fraction-free elimination above.
MPoly polymat_det(const PolyMatrix& m);
MPoly det_cofactor(const PolyMatrix& m);
MPoly det_bareiss(const PolyMatrix& m);

}  // namespace qinv
