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

#include "qinv/exact/linalg.hpp"

#include <algorithm>
#include <functional>

namespace qinv {

SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().val += e.val;
    } else {
      if (!out.empty() && out.back().val.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().val.is_zero()) out.pop_back();
  return out;
}

SparseRow dense_to_sparse(const ScalarVector& v) {
  SparseRow r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.push_back({static_cast<int>(i), v[i]});
  return r;
}

ScalarVector sparse_to_dense(const SparseRow& row, const CycField* field, int ncols) {
  ScalarVector v = zero_vector(field, ncols);
  for (const auto& e : row) v[e.col] = e.val;
  return v;
}

void row_axpy(SparseRow& a, const CycScalar& c, const SparseRow& b) {
  if (c.is_zero() || b.empty()) return;
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, c * b[j].val});
      ++j;
    } else {
      SparseEntry e = std::move(a[i++]);
      e.val.add_mul(c, b[j++].val);
      if (!e.val.is_zero()) out.push_back(std::move(e));
    }
  }
  a = std::move(out);
}

SparseRow EchelonBasis::reduce(SparseRow row) const {
  size_t pos = 0;
  while (pos < row.size()) {
    auto it = rows_.find(row[pos].col);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    CycScalar f = -row[pos].val;
    row_axpy(row, f, it->second);
  }
  return row;
}

bool EchelonBasis::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  CycScalar inv = row.front().val.inverse();
  for (auto& e : row) e.val *= inv;
  int pivot = row.front().col;
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::map<int, SparseRow> EchelonBasis::reduced_rows() const {
  std::map<int, SparseRow> out;
  // Highest pivot first: rows with larger pivots are already reduced when used.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseRow row = it->second;
    size_t pos = 1;
    while (pos < row.size()) {
      auto jt = out.find(row[pos].col);
      if (jt == out.end()) {
        ++pos;
        continue;
      }
      CycScalar f = -row[pos].val;
      row_axpy(row, f, jt->second);
    }
    out.emplace(it->first, std::move(row));
  }
  return out;
}

std::vector<ScalarVector> nullspace(const CycField* field, int ncols, const std::vector<SparseRow>& rows) {
  EchelonBasis eb(field);
  for (const auto& r : rows) {
    eb.insert(r);
    if (eb.rank() == ncols) break;
  }
  std::map<int, SparseRow> rref = eb.reduced_rows();
  std::vector<ScalarVector> basis;
  for (int free = 0; free < ncols; ++free) {
    if (rref.count(free)) continue;
    ScalarVector v = zero_vector(field, ncols);
    v[free] = CycScalar(field, 1L);
    for (const auto& [pivot, row] : rref) {
      if (pivot > free) break;
      for (const auto& e : row)
        if (e.col == free) v[pivot] = -e.val;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVector> solve_combination(const CycField* field, const std::vector<SparseRow>& generators,
                                              const SparseRow& target) {
  // Unknowns c_0..c_{k-1} and c_k (coefficient of -target); transpose into coordinate rows.
  const int k = static_cast<int>(generators.size());
  std::map<int, SparseRow> coord_rows;
  for (int g = 0; g < k; ++g)
    for (const auto& e : generators[g]) coord_rows[e.col].push_back({g, e.val});
  for (const auto& e : target) coord_rows[e.col].push_back({k, -e.val});
  std::vector<SparseRow> rows;
  rows.reserve(coord_rows.size());
  for (auto& [col, r] : coord_rows) rows.push_back(std::move(r));
  std::vector<ScalarVector> ns = nullspace(field, k + 1, rows);
  // Only the last free column can carry c_k = 1.
  for (const auto& v : ns) {
    if (v[k].is_zero()) continue;
    CycScalar s = v[k].inverse();
    ScalarVector c(v.begin(), v.begin() + k);
    for (auto& x : c) x *= s;
    return c;
  }
  return std::nullopt;
}

int MonomialIndexer::index(int slot, Monomial m) {
  auto [it, inserted] = map_.try_emplace({slot, m.bits()}, static_cast<int>(keys_.size()));
  if (inserted) keys_.emplace_back(slot, m);
  return it->second;
}

std::optional<int> MonomialIndexer::find(int slot, Monomial m) const {
  auto it = map_.find({slot, m.bits()});
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

SparseRow poly_to_row(const MPoly& p, MonomialIndexer& idx, int slot) {
  SparseRow r;
  r.reserve(p.size());
  for (const auto& t : p.terms()) r.push_back({idx.index(slot, t.mono), t.coef});
  return normalize_row(std::move(r));
}

SparseRow tuple_to_row(const std::vector<MPoly>& ps, MonomialIndexer& idx) {
  SparseRow r;
  for (size_t s = 0; s < ps.size(); ++s)
    for (const auto& t : ps[s].terms()) r.push_back({idx.index(static_cast<int>(s), t.mono), t.coef});
  return normalize_row(std::move(r));
}

std::vector<MPoly> independent_subset(const std::vector<MPoly>& polys) {
  std::vector<MPoly> out;
  if (polys.empty()) return out;
  MonomialIndexer idx;
  EchelonBasis eb(polys.front().field());
  for (const auto& p : polys)
    if (!p.is_zero() && eb.insert(poly_to_row(p, idx))) out.push_back(p);
  return out;
}

int poly_rank(const std::vector<MPoly>& polys) { return static_cast<int>(independent_subset(polys).size()); }

bool in_span(const std::vector<MPoly>& family, const MPoly& target) {
  if (target.is_zero()) return true;
  MonomialIndexer idx;
  EchelonBasis eb(target.field());
  for (const auto& p : family)
    if (!p.is_zero()) eb.insert(poly_to_row(p, idx));
  return eb.contains(poly_to_row(target, idx));
}

std::vector<MPoly> reduced_echelon(const std::vector<MPoly>& polys) {
  std::vector<MPoly> out;
  std::vector<Monomial> monos;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) monos.push_back(t.mono);
  if (monos.empty()) return out;
  std::sort(monos.begin(), monos.end(), std::greater<>());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  MonomialIndexer idx;
  for (Monomial m : monos) idx.index(0, m);
  const MPoly& first = polys.front();
  EchelonBasis eb(first.field());
  for (const auto& p : polys)
    if (!p.is_zero()) eb.insert(poly_to_row(p, idx));
  for (const auto& [pivot, row] : eb.reduced_rows()) {
    std::vector<Term> terms;
    for (const auto& e : row) terms.push_back({idx.key(e.col).second, e.val});
    out.push_back(MPoly::from_terms(first.field(), first.nvars(), std::move(terms)));
  }
  return out;
}

std::vector<std::vector<MPoly>> reduced_echelon_tuples(const std::vector<std::vector<MPoly>>& tuples) {
  std::vector<std::vector<MPoly>> out;
  if (tuples.empty()) return out;
  const size_t width = tuples.front().size();
  std::vector<std::pair<int, Monomial>> keys;
  for (const auto& t : tuples)
    for (size_t i = 0; i < width; ++i)
      for (const auto& term : t[i].terms()) keys.emplace_back(static_cast<int>(i), term.mono);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  MonomialIndexer idx;
  for (const auto& [slot, m] : keys) idx.index(slot, m);
  const MPoly& first = tuples.front().front();
  EchelonBasis eb(first.field());
  for (const auto& t : tuples) eb.insert(tuple_to_row(t, idx));
  for (const auto& [pivot, row] : eb.reduced_rows()) {
    std::vector<std::vector<Term>> terms(width);
    for (const auto& e : row) {
      auto [slot, m] = idx.key(e.col);
      terms[slot].push_back({m, e.val});
    }
    std::vector<MPoly> t;
    for (auto& ts : terms) t.push_back(MPoly::from_terms(first.field(), first.nvars(), std::move(ts)));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace qinv
