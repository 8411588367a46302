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

#include "qinv/quasi/quasi.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qinv/exact/linalg.hpp"

namespace qinv {

std::vector<int> GradedSubspace::dimensions() const {
  std::vector<int> out;
  for (const auto& l : levels) out.push_back(static_cast<int>(l.size()));
  return out;
}

std::vector<MPoly> GradedSubspace::new_at(int d) const {
  if (!filtered || d == 0) return levels.at(d);
  const auto& cur = levels.at(d);
  return {cur.begin() + static_cast<std::ptrdiff_t>(levels.at(d - 1).size()), cur.end()};
}

namespace {

/// Coordinates y with y_k = form(x) and y_i = x_i - (c_i/c_k) x_k for i != k,
/// where k is the first index with c_k != 0 and form(c) != 0. Returns the
/// images of x_1..x_N as linear forms in y, plus the index k.
std::pair<std::vector<MPoly>, int> adapted_coordinates(const ScalarVector& form, const ScalarVector& direction,
                                                       const std::optional<ScalarVector>& shift = std::nullopt) {
  const CycField* f = form.front().field();
  const int n = static_cast<int>(form.size());
  int k = 0;
  while (k < n && direction[k].is_zero()) ++k;
  if (k == n) throw std::invalid_argument("zero direction");
  ScalarMatrix a = ScalarMatrix::identity(f, n);
  CycScalar inv = direction[k].inverse();
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      for (int j = 0; j < n; ++j) a(k, j) = form[j];
    } else {
      a(i, k) = -(direction[i] * inv);
    }
  }
  ScalarMatrix x_of_y = a.inverse();
  std::vector<MPoly> images;
  for (int i = 0; i < n; ++i) {
    std::optional<CycScalar> c;
    if (shift) c = (*shift)[i];
    images.push_back(MPoly::linear_form(x_of_y.row(i), c));
  }
  return {images, k};
}

using CondEntry = std::pair<std::pair<int, Monomial>, CycScalar>;

/// Kernel of the linear map whose column c is described by column(c, out).
std::vector<ScalarVector> column_kernel(const CycField* f, int ncols,
                                        const std::function<void(int, std::vector<CondEntry>&)>& column, Exec exec) {
  std::vector<std::vector<CondEntry>> cols(ncols);
  for_each_index(exec, ncols, [&](std::ptrdiff_t c) { column(static_cast<int>(c), cols[c]); });
  MonomialIndexer rows_idx;
  std::vector<SparseRow> rows;
  for (int c = 0; c < ncols; ++c)
    for (auto& [key, val] : cols[c]) {
      int r = rows_idx.index(key.first, key.second);
      if (r == static_cast<int>(rows.size())) rows.emplace_back();
      rows[r].push_back({c, std::move(val)});
    }
  return nullspace(f, ncols, rows);
}

std::vector<Monomial> monomials_up_to(int nvars, int d) {
  std::vector<Monomial> out;
  for (int k = d; k >= 0; --k) {
    auto ms = monomials_of_degree(nvars, k);
    out.insert(out.end(), ms.begin(), ms.end());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MPoly vector_to_poly(const CycField* f, int nvars, const std::vector<Monomial>& monos, const ScalarVector& v,
                     size_t offset = 0) {
  std::vector<Term> terms;
  for (size_t i = 0; i < monos.size(); ++i)
    if (!v[offset + i].is_zero()) terms.push_back({monos[i], v[offset + i]});
  return MPoly::from_terms(f, nvars, std::move(terms));
}

struct HyperplaneFrame {
  int hyperplane;
  int required;  // m_H n_H
  int order;     // n_H
  int pivot;
  PowerCache cache;
};

std::vector<HyperplaneFrame> hyperplane_frames(const ReflectionGroup& g, const MultFn& m, int degree) {
  std::vector<HyperplaneFrame> frames;
  for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) {
    const Hyperplane& hp = g.hyperplanes()[h];
    int req = m.at(g, h) * hp.order;
    if (req == 0) continue;
    auto [images, pivot] = adapted_coordinates(hp.covector, hp.coroot);
    PowerCache pc(std::move(images));
    pc.prepare(degree);
    frames.push_back({h, req, hp.order, pivot, std::move(pc)});
  }
  return frames;
}

}  // namespace

QuasiWitness check_quasi_invariant(const ReflectionGroup& g, const MPoly& p, const MultFn& m) {
  QuasiWitness w;
  for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) {
    const Hyperplane& hp = g.hyperplanes()[h];
    int req = m.at(g, h) * hp.order;
    if (req == 0) continue;
    MPoly diff = p - g.act(hp.generator, p);
    if (diff.is_zero()) continue;
    DivisionResult r = poly_div_linear_power(diff, hp.alpha, req);
    if (!r.divisible()) return {false, h, r.max_exponent, req};
  }
  return w;
}

std::vector<MPoly> quasi_space(const ReflectionGroup& g, const MultFn& m, int d, Exec exec) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> monos = monomials_of_degree(g.rank(), d);
  std::sort(monos.begin(), monos.end(), std::greater<>());
  auto frames = hyperplane_frames(g, m, d);
  // In adapted coordinates s_H scales y_pivot by a primitive n_H-th root and fixes the rest, so
  // alpha^{mn} | (1 - s_H)p iff the coefficients of y_pivot^a y^b with a < mn, n_H !| a vanish.
  auto column = [&](int c, std::vector<CondEntry>& out) {
    for (size_t fi = 0; fi < frames.size(); ++fi) {
      const auto& fr = frames[fi];
      MPoly img = fr.cache.apply(monos[c]);
      for (const auto& t : img.terms()) {
        int a = t.mono.exp(fr.pivot);
        if (a < fr.required && a % fr.order != 0) out.push_back({{static_cast<int>(fi), t.mono}, t.coef});
      }
    }
  };
  auto kernel = column_kernel(g.field(), static_cast<int>(monos.size()), column, exec);
  std::vector<MPoly> polys;
  for (const auto& v : kernel) polys.push_back(vector_to_poly(g.field(), g.rank(), monos, v));
  return reduced_echelon(polys);
}

GradedSubspace quasi_graded(const ReflectionGroup& g, const MultFn& m, int cutoff, Exec exec) {
  GradedSubspace s;
  for (int d = 0; d <= cutoff; ++d) s.levels.push_back(quasi_space(g, m, d, exec));
  return s;
}

std::vector<MPoly> quasi_isotypic(const ReflectionGroup& g, const MultFn& m, int d, const ClassFunction& chi, int dim,
                                  Exec exec) {
  std::vector<MPoly> basis = quasi_space(g, m, d, exec);
  std::vector<MPoly> projected(basis.size());
  for_each_index(exec, static_cast<std::ptrdiff_t>(basis.size()),
                 [&](std::ptrdiff_t i) { projected[i] = isotypic_project(g, basis[i], chi, dim, Exec::kSerial); });
  return reduced_echelon(projected);
}

Rational cv_degree(const ReflectionGroup& g, const MultFn& m) {
  Rational r(weighted_hyperplane_sum(g, m), g.rank());
  r.canonicalize();
  return r;
}

namespace {

std::vector<VectorElement> vector_space_impl(const ReflectionGroup& g, const MultFn& m, int d, bool reduced,
                                             Exec exec) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const int n = g.rank();
  const CycField* f = g.field();
  std::vector<Monomial> monos = monomials_of_degree(n, d);
  std::sort(monos.begin(), monos.end(), std::greater<>());
  const int nm = static_cast<int>(monos.size());
  auto frames = hyperplane_frames(g, m, d);
  // Per frame: the matrices acting on the V factor whose outputs must be divisible.
  struct Action {
    size_t frame;
    ScalarMatrix mat;
  };
  std::vector<Action> actions;
  for (size_t fi = 0; fi < frames.size(); ++fi) {
    const Hyperplane& hp = g.hyperplanes()[frames[fi].hyperplane];
    if (reduced) {
      ScalarMatrix row(f, 1, n);
      for (int i = 0; i < n; ++i) row(0, i) = hp.covector[i];
      actions.push_back({fi, row});
      continue;
    }
    const ScalarMatrix& s = g.element(hp.generator);
    const CycScalar& det = g.det(hp.generator);
    for (int j = 1; j < hp.order; ++j) {
      ScalarMatrix e(f, n, n);
      ScalarMatrix power = ScalarMatrix::identity(f, n);
      for (int u = 0; u < hp.order; ++u) {
        CycScalar w = det.pow(static_cast<long>(j) * u);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) e(r, c).add_mul(w, power(r, c));
        power = power * s;
      }
      actions.push_back({fi, e});
    }
  }
  auto column = [&](int c, std::vector<CondEntry>& out) {
    const int slot = c / nm;
    const Monomial mono = monos[c % nm];
    for (size_t ai = 0; ai < actions.size(); ++ai) {
      const auto& act = actions[ai];
      const auto& fr = frames[act.frame];
      MPoly img = fr.cache.apply(mono);
      for (int k = 0; k < act.mat.rows(); ++k) {
        const CycScalar& w = act.mat(k, slot);
        if (w.is_zero()) continue;
        for (const auto& t : img.terms())
          if (t.mono.exp(fr.pivot) < fr.required)
            out.push_back({{static_cast<int>(ai) * n + k, t.mono}, w * t.coef});
      }
    }
  };
  auto kernel = column_kernel(f, n * nm, column, exec);
  std::vector<VectorElement> out;
  for (const auto& v : kernel) {
    VectorElement e;
    for (int i = 0; i < n; ++i) e.push_back(vector_to_poly(f, n, monos, v, static_cast<size_t>(i) * nm));
    out.push_back(std::move(e));
  }
  return reduced_echelon_tuples(out);
}

}  // namespace

std::vector<VectorElement> vector_quasi_space(const ReflectionGroup& g, const MultFn& m, int d, Exec exec) {
  return vector_space_impl(g, m, d, false, exec);
}

std::vector<VectorElement> vector_quasi_space_reduced(const ReflectionGroup& g, const MultFn& m, int d, Exec exec) {
  return vector_space_impl(g, m, d, true, exec);
}

bool is_vector_quasi_invariant(const ReflectionGroup& g, const VectorElement& f, const MultFn& m) {
  for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) {
    const Hyperplane& hp = g.hyperplanes()[h];
    int req = m.at(g, h) * hp.order;
    if (req == 0) continue;
    MPoly pairing = g.zero();
    for (int i = 0; i < g.rank(); ++i) pairing.add_scaled(f[i], hp.covector[i]);
    if (!poly_div_linear_power(pairing, hp.alpha, req).divisible()) return false;
  }
  return true;
}

std::vector<ShiftCondition> trig_conditions(const ReflectionGroup& g, const MultFn& m) {
  Family fam = g.spec().family;
  if (fam != Family::kA && fam != Family::kB && fam != Family::kD)
    throw std::invalid_argument("trigonometric quasi-invariants need a Weyl group of type A, B or D");
  std::vector<ShiftCondition> out;
  for (const auto& rd : root_data(g)) {
    int mult = m.at(g, rd.hyperplane);
    for (int j = 1; j <= mult; ++j) {
      CycScalar half(g.field(), Rational(j, 2));
      ScalarVector t = rd.coroot;
      for (auto& x : t) x *= half;
      out.push_back({rd.form, t});
    }
  }
  return out;
}

const CycField* bc_field() { return CycField::get(2); }

std::vector<ShiftCondition> bc_conditions(int n, int m1, int m2, int m3) {
  if (n < 1 || n > kMaxVars || m1 < 0 || m2 < 0 || m3 < 0) throw std::invalid_argument("bad BC parameters");
  const CycField* f = bc_field();
  std::vector<ShiftCondition> out;
  for (int j = 0; j < n; ++j) {
    ScalarVector e = unit_vector(f, n, j);
    auto scaled = [&](const Rational& s) {
      ScalarVector v = e;
      for (auto& x : v) x *= CycScalar(f, s);
      return v;
    };
    for (int s = 1; s <= m1; ++s) out.push_back({e, scaled(Rational(s))});
    for (int s = 1; s <= m2; ++s) out.push_back({e, scaled(Rational(2 * s - 1, 2))});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (long eps : {-1L, 1L}) {
        // (x_i + eps x_j) with shift (s/2)(e_i + eps e_j)
        ScalarVector form = zero_vector(f, n);
        form[i] = CycScalar(f, 1L);
        form[j] = CycScalar(f, eps);
        for (int s = 1; s <= m3; ++s) {
          ScalarVector t = form;
          for (auto& x : t) x *= CycScalar(f, Rational(s, 2));
          out.push_back({form, t});
        }
      }
  return out;
}

bool satisfies_shift_conditions(const MPoly& p, const std::vector<ShiftCondition>& conds) {
  const CycField* f = p.field();
  ScalarMatrix id = ScalarMatrix::identity(f, p.nvars());
  for (const auto& c : conds) {
    ScalarVector minus = c.shift;
    for (auto& x : minus) x = -x;
    MPoly diff = p.subst_linear(id, c.shift) - p.subst_linear(id, minus);
    if (diff.is_zero()) continue;
    if (!poly_div_linear_power(diff, MPoly::linear_form(c.form), 1).divisible()) return false;
  }
  return true;
}

GradedSubspace shift_condition_space(const CycField* field, int nvars, const std::vector<ShiftCondition>& conds, int d,
                                     Exec exec) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> monos = monomials_up_to(nvars, d);
  struct Frame {
    int pivot;
    PowerCache plus, minus;
  };
  std::vector<Frame> frames;
  for (const auto& c : conds) {
    ScalarVector neg = c.shift;
    for (auto& x : neg) x = -x;
    auto [ip, pivot] = adapted_coordinates(c.form, c.shift, c.shift);
    auto [im, pivot2] = adapted_coordinates(c.form, c.shift, neg);
    (void)pivot2;
    Frame fr{pivot, PowerCache(std::move(ip)), PowerCache(std::move(im))};
    fr.plus.prepare(d);
    fr.minus.prepare(d);
    frames.push_back(std::move(fr));
  }
  // The difference must vanish on the hyperplane y_pivot = 0.
  auto column = [&](int c, std::vector<CondEntry>& out) {
    for (size_t fi = 0; fi < frames.size(); ++fi) {
      const auto& fr = frames[fi];
      MPoly diff = fr.plus.apply(monos[c]) - fr.minus.apply(monos[c]);
      for (const auto& t : diff.terms())
        if (t.mono.exp(fr.pivot) == 0) out.push_back({{static_cast<int>(fi), t.mono}, t.coef});
    }
  };
  auto kernel = column_kernel(field, static_cast<int>(monos.size()), column, exec);
  std::vector<MPoly> polys;
  for (const auto& v : kernel) polys.push_back(vector_to_poly(field, nvars, monos, v));
  polys = reduced_echelon(polys);
  std::stable_sort(polys.begin(), polys.end(),
                   [](const MPoly& a, const MPoly& b) { return a.leading_term().mono < b.leading_term().mono; });
  GradedSubspace s;
  s.filtered = true;
  s.levels.resize(d + 1);
  for (int k = 0; k <= d; ++k)
    for (const auto& p : polys)
      if (p.degree() <= k) s.levels[k].push_back(p);
  return s;
}

GradedSubspace trig_quasi_space(const ReflectionGroup& g, const MultFn& m, int d, Exec exec) {
  return shift_condition_space(g.field(), g.rank(), trig_conditions(g, m), d, exec);
}

GradedSubspace bc_trig_quasi_space(int n, int m1, int m2, int m3, int d, Exec exec) {
  return shift_condition_space(bc_field(), n, bc_conditions(n, m1, m2, m3), d, exec);
}

MPoly bc_delta_polynomial(int n, int m1, int m2, int m3) {
  const CycField* f = bc_field();
  MPoly out = MPoly::constant(f, n, 1L);
  auto sq_minus = [&](const MPoly& lin, const Rational& c) {
    return lin * lin - MPoly::constant(f, n, CycScalar(f, c * c));
  };
  for (int i = 0; i < n; ++i) {
    MPoly xi = MPoly::variable(f, n, i);
    for (int s = 1; s <= m1; ++s) out *= sq_minus(xi, Rational(s));
    for (int t = 1; t <= m2; ++t) out *= sq_minus(xi, Rational(2 * t - 1, 2));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (long eps : {1L, -1L}) {
        MPoly lin = MPoly::variable(f, n, i) - MPoly::variable(f, n, j) * CycScalar(f, eps);
        for (int r = 1; r <= m3; ++r) out *= sq_minus(lin, Rational(r));
      }
  return out;
}

MPoly delta_shift(const MPoly& p, const ScalarVector& alpha, const CycScalar& scale) {
  ScalarVector plus = alpha, minus = alpha;
  for (auto& x : plus) x *= scale;
  for (auto& x : minus) x = -(x * scale);
  ScalarMatrix id = ScalarMatrix::identity(p.field(), p.nvars());
  return p.subst_linear(id, plus) - p.subst_linear(id, minus);
}

ChainResult delta_chain_check(const MPoly& p, const ScalarVector& alpha, int l, int r) {
  if (l < 0 || r < 0) throw std::invalid_argument("negative chain length");
  const CycField* f = p.field();
  MPoly form = MPoly::linear_form(alpha);
  CycScalar one(f, 1L), two(f, 2L);
  int step = 0;
  // Divides by (alpha, x); failure means the previous difference does not vanish on the hyperplane.
  auto divide = [&](const MPoly& q, std::optional<MPoly>& out) {
    ++step;
    DivisionResult d = poly_div_linear_power(q, form, 1);
    out = d.quotient;
    return d.divisible();
  };
  std::optional<MPoly> cur;
  MPoly q = p;
  if (l > 0) {
    q = delta_shift(p, alpha, one);
    for (int s = 1; s <= l; ++s) {
      if (!divide(q, cur))
        return {false, step, "delta chain: step " + std::to_string(s) + " does not vanish on the hyperplane"};
      if (s < l) q = delta_shift(*cur, alpha, one);
    }
    if (r > 0) q = delta_shift(*cur, alpha, two);
  } else if (r > 0) {
    q = delta_shift(p, alpha, two);
  }
  for (int t = 1; t <= r; ++t) {
    if (!divide(q, cur))
      return {false, step, "doubled chain: step " + std::to_string(t) + " does not vanish on the hyperplane"};
    if (t < r) q = delta_shift(*cur, alpha, two);
  }
  return {};
}

bool direct_chain_check(const MPoly& p, const ScalarVector& alpha, int l, int r) {
  const CycField* f = p.field();
  std::vector<ShiftCondition> conds;
  auto add = [&](int s) {
    ScalarVector t = alpha;
    for (auto& x : t) x *= CycScalar(f, static_cast<long>(s));
    conds.push_back({alpha, t});
  };
  for (int s = 1; s <= l; ++s) add(s);
  for (int s = 1; s <= r; ++s) add(l + 2 * s);
  return satisfies_shift_conditions(p, conds);
}

std::pair<int, int> bc_chain_params(int m1, int m2) {
  // Shifts of e_j/2 by s = 1..l cover the integer and half-integer shifts together.
  if (m1 >= m2) return {2 * m2, m1 - m2};
  return {2 * m1 + 1, m2 - m1 - 1};
}

GradedSubspace leading_term_space(const GradedSubspace& filtered) {
  if (!filtered.filtered) throw std::invalid_argument("leading terms need a filtered space");
  GradedSubspace out;
  for (int d = 0; d <= filtered.cutoff(); ++d) {
    std::vector<MPoly> top;
    for (const auto& p : reduced_echelon(filtered.basis(d)))
      if (p.degree() == d) top.push_back(p.homogeneous_part(d));
    out.levels.push_back(reduced_echelon(top));
  }
  return out;
}

}  // namespace qinv
