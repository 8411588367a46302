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

#include "qinv/exact/polymatrix.hpp"

#include <stdexcept>

namespace qinv {

PolyMatrix::PolyMatrix(const CycField* field, int nvars, int rows, int cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, MPoly(field, nvars)) {}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<MPoly>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty polynomial matrix");
  const MPoly& proto = rows.front().front();
  PolyMatrix m(proto.field(), proto.nvars(), static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_) throw std::invalid_argument("ragged polynomial matrix");
    for (int j = 0; j < m.cols_; ++j) {
      if (rows[i][j].nvars() != m.nvars_) throw std::invalid_argument("entries must share variable count");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::minor(int skip_row, int skip_col) const {
  PolyMatrix m(field_, nvars_, rows_ - 1, cols_ - 1);
  for (int i = 0, r = 0; i < rows_; ++i) {
    if (i == skip_row) continue;
    for (int j = 0, c = 0; j < cols_; ++j) {
      if (j == skip_col) continue;
      m(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return m;
}

MPoly det_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return MPoly::constant(m.field(), m.nvars(), 1L);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  MPoly det(m.field(), m.nvars());
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    MPoly term = m(0, j) * det_cofactor(m.minor(0, j));
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

MPoly det_bareiss(const PolyMatrix& m_in) {
  if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m_in.rows();
  if (n == 0) return MPoly::constant(m_in.field(), m_in.nvars(), 1L);
  PolyMatrix a = m_in;
  MPoly prev = MPoly::constant(a.field(), a.nvars(), 1L);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      int swap_row = k + 1;
      while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return MPoly(a.field(), a.nvars());
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MPoly num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = divide_exact(num, prev);
        if (!q) throw ArithmeticError("fraction-free elimination produced an inexact division");
        a(i, j) = std::move(*q);
      }
      a(i, k) = MPoly(a.field(), a.nvars());
    }
    prev = a(k, k);
  }
  MPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

MPoly polymat_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

}  // namespace qinv
