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

#include "qinv/reflection/projections.hpp"

#include <stdexcept>

#include "qinv/exact/linalg.hpp"

namespace qinv {

ClassFunction vstar_character(const ReflectionGroup& g) {
  ClassFunction chi;
  for (int e = 0; e < g.order(); ++e) chi.push_back(g.trace(g.inverse(e)));
  return chi;
}

ClassFunction trivial_character(const ReflectionGroup& g) { return ClassFunction(g.order(), CycScalar(g.field(), 1L)); }

ClassFunction det_character(const ReflectionGroup& g, int power) {
  ClassFunction chi;
  for (int e = 0; e < g.order(); ++e) chi.push_back(g.det(e).pow(power));
  return chi;
}

std::vector<MPoly> orbit_images(const ReflectionGroup& g, const MPoly& p, Exec exec) {
  std::vector<MPoly> out(g.order());
  for_each_index(exec, g.order(), [&](std::ptrdiff_t e) { out[e] = g.act(static_cast<int>(e), p); });
  return out;
}

namespace {

// Weighted sum with a fixed reduction order.
MPoly weighted_sum(const ReflectionGroup& g, const MPoly& p, const ClassFunction* weights, const CycScalar& scale,
                   Exec exec) {
  std::vector<MPoly> images = orbit_images(g, p, exec);
  MPoly acc(p.field(), p.nvars());
  for (int e = 0; e < g.order(); ++e) {
    if (weights) {
      const CycScalar& w = (*weights)[g.inverse(e)];
      if (!w.is_zero()) acc.add_scaled(images[e], w);
    } else {
      acc += images[e];
    }
  }
  acc *= scale;
  return acc;
}

}  // namespace

MPoly reynolds(const ReflectionGroup& g, const MPoly& p, Exec exec) {
  return weighted_sum(g, p, nullptr, CycScalar(g.field(), Rational(1, g.order())), exec);
}

MPoly isotypic_project(const ReflectionGroup& g, const MPoly& p, const ClassFunction& chi, int dim, Exec exec) {
  if (static_cast<int>(chi.size()) != g.order()) throw std::invalid_argument("class function size mismatch");
  return weighted_sum(g, p, &chi, CycScalar(g.field(), Rational(dim, g.order())), exec);
}

MPoly vstar_project(const ReflectionGroup& g, const MPoly& p, Exec exec) {
  return isotypic_project(g, p, vstar_character(g), g.rank(), exec);
}

MPoly idempotent_apply(const ReflectionGroup& g, int hyperplane, int i, const MPoly& p) {
  const Hyperplane& h = g.hyperplanes().at(hyperplane);
  if (i < 1 || i >= h.order) throw std::out_of_range("idempotent index outside 1..n_H-1");
  MPoly acc(p.field(), p.nvars());
  MPoly cur = p;
  for (int u = 0; u < h.order; ++u) {
    // cur = s_H^u . p, det(s_H^u) = det(s_H)^u
    acc.add_scaled(cur, g.det(h.generator).pow(static_cast<long>(u) * i));
    cur = g.act(h.generator, cur);
  }
  return acc;
}

std::vector<Rational> molien_multiplicities(const ReflectionGroup& g, const ClassFunction& chi, int max_degree) {
  const CycField* f = g.field();
  std::vector<CycScalar> total(max_degree + 1, CycScalar(f));
  for (int e = 0; e < g.order(); ++e) {
    // The character of S^d V* at e is [t^d] 1/det(1 - t e^{-1}).
    const ScalarVector& cp = g.char_poly(g.inverse(e));
    std::vector<CycScalar> series(max_degree + 1, CycScalar(f));
    series[0] = CycScalar(f, 1L);
    for (int d = 1; d <= max_degree; ++d)
      for (int j = 1; j < static_cast<int>(cp.size()) && j <= d; ++j) series[d].sub_mul(cp[j], series[d - j]);
    CycScalar w = chi[e].conj();
    for (int d = 0; d <= max_degree; ++d) total[d].add_mul(w, series[d]);
  }
  std::vector<Rational> out;
  CycScalar inv_order(f, Rational(1, g.order()));
  for (auto& t : total) {
    t *= inv_order;
    if (!t.is_rational()) throw std::logic_error("non-rational Molien coefficient");
    out.push_back(t.rational());
  }
  return out;
}

std::vector<int> invariant_dimensions(const ReflectionGroup& g, int max_degree) {
  std::vector<int> out;
  for (const auto& r : molien_multiplicities(g, trivial_character(g), max_degree)) {
    if (r.get_den() != 1) throw std::logic_error("non-integral Molien coefficient");
    out.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return out;
}

std::vector<MPoly> invariant_space(const ReflectionGroup& g, int d, Exec exec) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const int target = invariant_dimensions(g, d).back();
  std::vector<Monomial> monos = monomials_of_degree(g.rank(), d);
  MonomialIndexer idx;
  EchelonBasis eb(g.field());
  std::vector<MPoly> found;
  const int batch = std::max(8, 2 * max_threads());
  for (size_t start = 0; start < monos.size() && eb.rank() < target; start += batch) {
    size_t stop = std::min(monos.size(), start + batch);
    std::vector<MPoly> images(stop - start);
    for_each_index(exec, static_cast<std::ptrdiff_t>(images.size()), [&](std::ptrdiff_t i) {
      MPoly m = MPoly::monomial(g.field(), g.rank(), monos[start + i], CycScalar(g.field(), 1L));
      images[i] = reynolds(g, m, Exec::kSerial);
    });
    for (auto& img : images)
      if (!img.is_zero() && eb.rank() < target && eb.insert(poly_to_row(img, idx))) found.push_back(std::move(img));
  }
  if (eb.rank() != target) throw std::logic_error("Reynolds images do not reach the Molien count");
  return reduced_echelon(found);
}

}  // namespace qinv
