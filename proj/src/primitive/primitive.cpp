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

#include "qinv/primitive/primitive.hpp"

#include <algorithm>
#include <sstream>

#include "qinv/exact/linalg.hpp"
#include "qinv/exact/polymatrix.hpp"

namespace qinv {

namespace {

/// Division by one polynomial; terms whose monomial is not divisible by the
/// leading monomial of q move to the remainder.
std::pair<MPoly, MPoly> divide_with_remainder(const MPoly& p, const MPoly& q) {
  MPoly rem(p.field(), p.nvars());
  MPoly quot(p.field(), p.nvars());
  MPoly work = p;
  const Term lead = q.leading_term();
  const CycScalar lead_inv = lead.coef.inverse();
  const MPoly one = MPoly::constant(p.field(), p.nvars(), 1L);
  while (!work.is_zero()) {
    const Term t = work.leading_term();
    if (t.mono.divisible_by(lead.mono)) {
      Monomial m = t.mono / lead.mono;
      CycScalar c = t.coef * lead_inv;
      quot.add_scaled(one, c, m);
      work.add_scaled(q, -c, m);
    } else {
      rem.add_scaled(one, t.coef, t.mono);
      work.add_scaled(one, -t.coef, t.mono);
    }
  }
  return {quot, rem};
}

/// Exponent vectors e with sum e_i deg_i = d.
void weighted_exponents(const std::vector<int>& degs, int d, size_t at, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (at == degs.size()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * degs[at] <= d; ++e) {
    cur[at] = e;
    weighted_exponents(degs, d - e * degs[at], at + 1, cur, out);
  }
  cur[at] = 0;
}

std::vector<MPoly> products_of_degree(const ReflectionGroup& g, const std::vector<MPoly>& ys,
                                      const std::vector<int>& degs, int d) {
  std::vector<std::vector<int>> exps;
  std::vector<int> cur(degs.size(), 0);
  weighted_exponents(degs, d, 0, cur, exps);
  std::vector<MPoly> out;
  for (const auto& e : exps) {
    MPoly p = g.one();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) p = p * ys[i].pow(e[i]);
    out.push_back(p);
  }
  return out;
}

BasicInvariants finish(const ReflectionGroup& g, std::vector<MPoly> ys) {
  const int n = g.rank();
  BasicInvariants bi;
  for (const auto& y : ys) bi.degrees.push_back(y.degree());
  bi.ys = std::move(ys);
  PolyMatrix jac(g.field(), n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac(i, j) = bi.ys[i].partial(j);
  bi.jacobian = polymat_det(jac);
  if (bi.jacobian.is_zero()) throw PrimitiveError("Jacobian vanishes: the invariants are algebraically dependent");
  MPoly q = bi.jacobian;
  for (const auto& h : g.hyperplanes()) {
    DivisionResult r = poly_div_linear_power(q, h.alpha, h.order - 1);
    if (!r.divisible()) throw PrimitiveError("Jacobian is not divisible by " + h.alpha.to_string());
    q = *r.quotient;
  }
  if (!q.is_constant()) throw PrimitiveError("Jacobian has the extra factor " + q.to_string());
  bi.jacobian_scalar = q.constant_term();
  bi.top_unique = n == 1 || bi.degrees[n - 1] > bi.degrees[n - 2];
  for (int j = 0; j < n; ++j) {
    if (n == 1) {
      bi.cofactors.push_back(g.one());
      break;
    }
    PolyMatrix minor(g.field(), n, n - 1, n - 1);
    for (int r = 0; r + 1 < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r, cc++) = jac(r, c);
    MPoly cof = polymat_det(minor);
    if ((n - 1 + j) % 2) cof = -cof;
    bi.cofactors.push_back(cof);
  }
  return bi;
}

}  // namespace

std::string BasicInvariants::report() const {
  std::ostringstream os;
  os << "degrees";
  for (int d : degrees) os << " " << d;
  os << "\n";
  for (size_t i = 0; i < ys.size(); ++i) os << "y" << (i + 1) << " " << ys[i].to_string() << "\n";
  os << "jacobian_scalar " << jacobian_scalar.to_string() << "\n";
  os << "top_degree_unique " << (top_unique ? "yes" : "no") << "\n";
  return os.str();
}

BasicInvariants basic_invariants(const ReflectionGroup& g, Exec exec) {
  const int n = g.rank();
  const int max_degree = g.order();
  std::vector<int> dims = invariant_dimensions(g, max_degree);
  std::vector<MPoly> ys;
  std::vector<int> degs;
  for (int d = 1; d <= max_degree && static_cast<int>(ys.size()) < n; ++d) {
    std::vector<MPoly> products = products_of_degree(g, ys, degs, d);
    const int missing = dims[d] - static_cast<int>(products.size());
    if (missing <= 0) continue;
    EchelonBasis span(g.field());
    MonomialIndexer idx;
    for (const auto& p : products) span.insert(poly_to_row(p, idx));
    std::vector<MPoly> cands = invariant_space(g, d, exec);
    std::sort(cands.begin(), cands.end(),
              [](const MPoly& a, const MPoly& b) { return a.leading_term().mono < b.leading_term().mono; });
    int added = 0;
    std::vector<MPoly> fresh;
    for (const auto& c : cands) {
      if (added == missing) break;
      if (span.insert(poly_to_row(c, idx))) {
        fresh.push_back(c.monic());
        ++added;
      }
    }
    if (added != missing) throw PrimitiveError("invariant space too small at degree " + std::to_string(d));
    for (auto& y : fresh) {
      ys.push_back(std::move(y));
      degs.push_back(d);
    }
  }
  if (static_cast<int>(ys.size()) != n) throw PrimitiveError("did not find " + std::to_string(n) + " basic invariants");
  return finish(g, std::move(ys));
}

BasicInvariants basic_invariants_from(const ReflectionGroup& g, std::vector<MPoly> ys) {
  if (static_cast<int>(ys.size()) != g.rank()) throw PrimitiveError("need one invariant per coordinate");
  long product = 1;
  for (size_t i = 0; i < ys.size(); ++i) {
    const MPoly& y = ys[i];
    if (y.is_zero() || !y.is_homogeneous()) throw PrimitiveError("basic invariants must be homogeneous and nonzero");
    if (i > 0 && y.degree() < ys[i - 1].degree()) throw PrimitiveError("degrees must be nondecreasing");
    for (int w = 0; w < g.order(); ++w)
      if (g.act(w, y) != y) throw PrimitiveError("y" + std::to_string(i + 1) + " is not invariant");
    product *= y.degree();
  }
  if (product != g.order()) throw PrimitiveError("product of degrees differs from the group order");
  return finish(g, std::move(ys));
}

PrimitiveResult primitive_apply(const BasicInvariants& bi, const MPoly& p) {
  if (!bi.top_unique)
    throw PrimitiveError("highest degree is repeated; the primitive derivation is not unique up to scalar");
  MPoly num(p.field(), p.nvars());
  for (size_t j = 0; j < bi.cofactors.size(); ++j) num += bi.cofactors[j] * p.partial(static_cast<int>(j));
  auto [quot, rem] = divide_with_remainder(num, bi.jacobian);
  PrimitiveResult r{std::nullopt, num, rem};
  if (rem.is_zero()) r.value = quot;
  return r;
}

MPoly primitive_value(const BasicInvariants& bi, const MPoly& p) {
  PrimitiveResult r = primitive_apply(bi, p);
  if (!r.value) throw PrimitiveError("D(p) is not a polynomial; remainder " + r.remainder.to_string());
  return *r.value;
}

Derivation nabla_D(const BasicInvariants& bi, const Derivation& field) {
  std::vector<MPoly> comps;
  for (const auto& c : field.components) comps.push_back(primitive_value(bi, c));
  return Derivation(std::move(comps));
}

MultFn shifted(const MultFn& m, int delta) {
  MultFn out = m;
  for (int& v : out.per_orbit) {
    v += delta;
    if (v < 0) throw std::invalid_argument("multiplicity would become negative");
  }
  return out;
}

NablaInverse nabla_D_inverse(const ReflectionGroup& g, const BasicInvariants& bi, const MultFn& m,
                             const Derivation& target, Exec exec) {
  NablaInverse out;
  if (target.is_zero()) {
    out.field = Derivation::zero(g.field(), g.rank());
    out.status = "zero target";
    return out;
  }
  if (!target.is_homogeneous()) {
    out.status = "target is not homogeneous";
    return out;
  }
  const int d = target.degree() + bi.top_degree();
  std::vector<Derivation> source = dm_invariant_fields(g, shifted(m, 1), d, exec);
  out.source_dim = static_cast<int>(source.size());
  MonomialIndexer idx;
  std::vector<SparseRow> images;
  EchelonBasis rank(g.field());
  for (const auto& L : source) {
    images.push_back(tuple_to_row(nabla_D(bi, L).components, idx));
    rank.insert(images.back());
  }
  out.image_rank = rank.rank();
  auto coeffs = solve_combination(g.field(), images, tuple_to_row(target.components, idx));
  if (!coeffs) {
    out.status = "target outside the image at degree " + std::to_string(d);
    return out;
  }
  if (out.image_rank != out.source_dim) {
    out.status = "nabla_D has a kernel at degree " + std::to_string(d);
    return out;
  }
  Derivation L = Derivation::zero(g.field(), g.rank());
  for (size_t i = 0; i < source.size(); ++i) L = L + source[i].scaled((*coeffs)[i]);
  out.field = L;
  out.status = "ok";
  return out;
}

std::vector<PrimitiveRankRow> primitive_rank_table(const ReflectionGroup& g, const BasicInvariants& bi,
                                                   const MultFn& m, int cutoff, Exec exec) {
  const int n = g.rank();
  const MultFn lower = shifted(m, -1);
  const ClassFunction chi = vstar_character(g);
  std::vector<PrimitiveRankRow> rows;
  for (int d = 0; d <= cutoff; ++d) {
    PrimitiveRankRow row;
    row.degree = d;
    std::vector<MPoly> src = quasi_isotypic(g, m, d, chi, n, exec);
    std::vector<MPoly> tgt;
    if (d >= bi.top_degree()) tgt = quasi_isotypic(g, lower, d - bi.top_degree(), chi, n, exec);
    row.source_dim = static_cast<int>(src.size());
    row.target_dim = static_cast<int>(tgt.size());
    std::vector<MPoly> images(src.size());
    for_each_index(exec, static_cast<std::ptrdiff_t>(src.size()),
                   [&](std::ptrdiff_t i) { images[i] = primitive_value(bi, src[i]); });
    row.rank = poly_rank(images);
    for (const auto& im : images)
      if (!im.is_zero() && !in_span(tgt, im)) row.lands_in_target = false;
    rows.push_back(row);
  }
  return rows;
}

std::vector<int> dihedral_index_set(int ell, int total_mult) {
  if (total_mult % 2 == 0) return {1, 2 * ell - 1};
  return {ell - 1, ell + 1};
}

namespace {

int half_order(const ReflectionGroup& g) {
  if (g.spec().family != Family::kDihedralComplex || g.spec().k % 2 != 0)
    throw std::invalid_argument("expected I2(2l) in complex coordinates");
  return g.spec().k / 2;
}

}  // namespace

MultFn dihedral_mult(const ReflectionGroup& g, int m1, int m2) {
  half_order(g);
  const CycField* f = g.field();
  int h = g.find_hyperplane({CycScalar(f, 1L), CycScalar(f, -1L)});
  if (h < 0) throw std::logic_error("z = zbar is not a mirror");
  MultFn m{{m2, m2}};
  m.per_orbit[g.hyperplanes()[h].orbit] = m1;
  return m;
}

std::pair<MPoly, MPoly> dihedral_q(const ReflectionGroup& g, int m1, int m2, int i) {
  const int ell = half_order(g);
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("multiplicities must be nonnegative");
  const int total = m1 + m2;
  auto allowed = dihedral_index_set(ell, total);
  if (std::find(allowed.begin(), allowed.end(), i) == allowed.end())
    throw std::invalid_argument("index " + std::to_string(i) + " outside the admissible set for |m| = " +
                                std::to_string(total));
  const int d = total * ell + i;
  std::vector<Monomial> support;
  for (int s = 0; s <= total; ++s) {
    const int e[2] = {(total - s) * ell + i, ell * s};
    support.push_back(Monomial::from_exponents(e));
  }
  std::vector<MPoly> q = quasi_space(g, dihedral_mult(g, m1, m2), d, Exec::kSerial);
  // Combinations of the quasi-invariant basis with no coefficient outside the support.
  MonomialIndexer idx;
  std::vector<std::vector<SparseEntry>> cols(q.size());
  for (size_t c = 0; c < q.size(); ++c)
    for (const auto& t : q[c].terms())
      if (std::find(support.begin(), support.end(), t.mono) == support.end())
        cols[c].push_back({idx.index(0, t.mono), t.coef});
  std::vector<SparseRow> rows(idx.size());
  for (size_t c = 0; c < q.size(); ++c)
    for (const auto& e : cols[c]) rows[e.col].push_back({static_cast<int>(c), e.val});
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  auto kernel = nullspace(g.field(), static_cast<int>(q.size()), rows);
  if (kernel.size() != 1)
    throw PrimitiveError("expected a unique quasi-invariant of the given shape, found a space of dimension " +
                         std::to_string(kernel.size()));
  MPoly out = g.zero();
  for (size_t c = 0; c < q.size(); ++c) out.add_scaled(q[c], kernel[0][c]);
  CycScalar lead = out.coefficient(support.front());
  if (lead.is_zero()) throw PrimitiveError("the quasi-invariant has no leading z-power");
  out *= lead.inverse();
  MPoly conj = out.permute_vars({1, 0}, 2).conj_coefficients();
  return {out, conj};
}

BasicInvariants dihedral_basic_invariants(const ReflectionGroup& g) {
  const int ell = half_order(g);
  MPoly z = g.var(0), zb = g.var(1);
  MPoly y2 = z.pow(2 * ell) + zb.pow(2 * ell);
  y2 *= CycScalar(g.field(), Rational(1, 2 * ell));
  return basic_invariants_from(g, {z * zb, y2});
}

}  // namespace qinv
