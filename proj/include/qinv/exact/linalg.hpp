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

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qinv/exact/cyclotomic.hpp"
#include "qinv/exact/matrix.hpp"
#include "qinv/exact/mpoly.hpp"

namespace qinv {

struct SparseEntry {
  int col;
  CycScalar val;
};

/// Sparse row with strictly increasing column indices and no zeros.
using SparseRow = std::vector<SparseEntry>;

/// Sorts by column, merges duplicates and drops zeros.
SparseRow normalize_row(SparseRow row);
SparseRow dense_to_sparse(const ScalarVector& v);
ScalarVector sparse_to_dense(const SparseRow& row, const CycField* field, int ncols);
/// a += c * b
void row_axpy(SparseRow& a, const CycScalar& c, const SparseRow& b);

/// Row echelon form maintained incrementally. Pivot of a row is its lowest
/// column; stored rows are scaled so the pivot entry is 1.
class EchelonBasis {
 public:
  explicit EchelonBasis(const CycField* field) : field_(field) {}

  /// Eliminates every pivot column from the row.
  SparseRow reduce(SparseRow row) const;
  /// Returns true when the row was independent of the current span.
  bool insert(SparseRow row);
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const CycField* field() const { return field_; }

  /// Fully reduced rows keyed by pivot column.
  std::map<int, SparseRow> reduced_rows() const;

 private:
  const CycField* field_;
  std::map<int, SparseRow> rows_;
};

/// Basis of {v : row . v = 0 for all rows} as dense vectors of length ncols.
/// Each basis vector has a 1 at its free column and 0 at the other free columns;
/// vectors are ordered by free column.
std::vector<ScalarVector> nullspace(const CycField* field, int ncols, const std::vector<SparseRow>& rows);

/// Coefficients c with sum_i c_i generators[i] = target, or nullopt.
/// Columns are the generators; rows are arbitrary shared coordinates.
std::optional<ScalarVector> solve_combination(const CycField* field, const std::vector<SparseRow>& generators,
                                              const SparseRow& target);

/// Assigns dense column indices to (slot, monomial) pairs on first use so that
/// polynomials and polynomial tuples can be fed into EchelonBasis.
class MonomialIndexer {
 public:
  int index(int slot, Monomial m);
  std::optional<int> find(int slot, Monomial m) const;
  int size() const { return static_cast<int>(keys_.size()); }
  std::pair<int, Monomial> key(int col) const { return keys_[col]; }

 private:
  struct KeyHash {
    size_t operator()(const std::pair<int, uint64_t>& k) const {
      return std::hash<uint64_t>{}(k.second * 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(k.first));
    }
  };
  std::unordered_map<std::pair<int, uint64_t>, int, KeyHash> map_;
  std::vector<std::pair<int, Monomial>> keys_;
};

SparseRow poly_to_row(const MPoly& p, MonomialIndexer& idx, int slot = 0);
SparseRow tuple_to_row(const std::vector<MPoly>& ps, MonomialIndexer& idx);

/// Extracts a maximal linearly independent subfamily, keeping input order.
std::vector<MPoly> independent_subset(const std::vector<MPoly>& polys);
/// Rank of a polynomial family.
int poly_rank(const std::vector<MPoly>& polys);
/// True when target lies in the span of the family.
bool in_span(const std::vector<MPoly>& family, const MPoly& target);
/// Canonical basis of the span: reduced echelon form with respect to
/// descending graded-lex order, each element monic, sorted by leading monomial.
std::vector<MPoly> reduced_echelon(const std::vector<MPoly>& polys);
/// Same for equal-length tuples; columns ordered by slot, then descending monomial.
std::vector<std::vector<MPoly>> reduced_echelon_tuples(const std::vector<std::vector<MPoly>>& tuples);

}  // namespace qinv
