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

#include "qinv/logder/transport.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qinv/exact/linalg.hpp"

namespace qinv {

VectorElement equivariant_tuple(const ReflectionGroup& g, const MPoly& p, int slot, Exec exec) {
  const int n = g.rank();
  std::vector<MPoly> images = orbit_images(g, p, exec);
  VectorElement out(n, g.zero());
  for (int w = 0; w < g.order(); ++w) {
    const ScalarMatrix& mat = g.element(w);
    for (int j = 0; j < n; ++j) {
      const CycScalar& c = mat(j, slot);
      if (!c.is_zero()) out[j].add_scaled(images[w], c);
    }
  }
  return out;
}

bool is_equivariant_tuple(const ReflectionGroup& g, const VectorElement& phi) {
  return is_invariant_derivation(g, Derivation(phi));
}

std::vector<VectorElement> hom_space(const ReflectionGroup& g, const MultFn& m, int d, Exec exec) {
  const int n = g.rank();
  std::vector<MPoly> iso = quasi_isotypic(g, m, d, vstar_character(g), n, exec);
  if (iso.size() % n != 0) throw std::logic_error("isotypic dimension not a multiple of the rank");
  const size_t expected = iso.size() / n;
  std::vector<VectorElement> out;
  if (expected == 0) return out;
  std::vector<VectorElement> tuples;
  for (int slot = 0; slot < n && out.size() < expected; ++slot) {
    std::vector<VectorElement> batch(iso.size());
    for_each_index(exec, static_cast<std::ptrdiff_t>(iso.size()),
                   [&](std::ptrdiff_t i) { batch[i] = equivariant_tuple(g, iso[i], slot, Exec::kSerial); });
    tuples.insert(tuples.end(), batch.begin(), batch.end());
    out = reduced_echelon_tuples(tuples);
  }
  if (out.size() != expected) throw std::logic_error("equivariant averaging did not reach the expected dimension");
  return out;
}

Derivation theta_from_hom(const ReflectionGroup& g, const MultFn& m, const VectorElement& phi) {
  Derivation L(phi);
  if (!is_invariant_derivation(g, L)) throw std::logic_error("Theta image is not invariant");
  if (!derivation_member(L, dm_arrangement(g, m)).ok) throw std::logic_error("Theta image is not in D_m");
  return L;
}

VectorElement theta_inverse(const Derivation& L) {
  VectorElement out;
  for (int k = 0; k < L.nvars(); ++k) out.push_back(L.apply(MPoly::variable(L.field(), L.nvars(), k)));
  return out;
}

Derivation rho_from_vector_quasi(const ReflectionGroup& g, const MultFn& m, const VectorElement& phi) {
  Derivation L(phi);
  if (!derivation_member(L, dtilde_arrangement(g, m)).ok) throw std::logic_error("rho image is not logarithmic");
  return L;
}

std::vector<Derivation> dm_invariant_fields(const ReflectionGroup& g, const MultFn& m, int d, Exec exec) {
  std::vector<Derivation> out;
  for (const auto& phi : hom_space(g, m, d, exec)) out.push_back(theta_from_hom(g, m, phi));
  return out;
}

std::vector<Derivation> dtilde_fields(const ReflectionGroup& g, const MultFn& m, int d, Exec exec) {
  std::vector<Derivation> out;
  for (const auto& phi : vector_quasi_space(g, m, d, exec)) out.push_back(rho_from_vector_quasi(g, m, phi));
  return out;
}

namespace {

int floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return static_cast<int>(q.get_si());
}

}  // namespace

FreenessCertificate certify_dm(const ReflectionGroup& g, const MultFn& m, Exec exec) {
  MultiArrangement arr = dm_arrangement(g, m);
  arr.label = "D_m(" + g.label() + ", m=" + m.to_string() + ")";
  const int lo = floor_of(cv_degree(g, m));
  const int hi = std::max(lo, arr.total_multiplicity() - (g.rank() - 1) * lo);
  return free_basis(arr, [&](int d) { return dm_invariant_fields(g, m, d, exec); }, lo, hi);
}

FreenessCertificate certify_dtilde(const ReflectionGroup& g, const MultFn& m, Exec exec) {
  MultiArrangement arr = dtilde_arrangement(g, m);
  arr.label = "Dtilde_m(" + g.label() + ", m=" + m.to_string() + ")";
  Rational cv = cv_degree(g, m);
  if (cv.get_den() != 1) {
    FreenessCertificate cert = saito_certificate(arr, {});
    cert.reason = "c_V(m) = " + cv.get_str() + " is not an integer";
    return cert;
  }
  const int d = static_cast<int>(cv.get_num().get_si());
  return free_basis(arr, [&](int deg) { return dtilde_fields(g, m, deg, exec); }, d, d);
}

std::vector<Rational> appearance_degrees(const ReflectionGroup& g, const MultFn& m, const std::vector<int>& exponents) {
  Rational cv = cv_degree(g, m);
  std::vector<Rational> out;
  for (int e : exponents) {
    Rational b = Rational(e) - cv;
    b.canonicalize();
    out.push_back(b);
  }
  return out;
}

std::vector<Derivation> symmetric_integral_basis(int n, int m) {
  if (n < 1 || n + 2 > kMaxVars || m < 0) throw std::invalid_argument("unsupported symmetric group size");
  const CycField* f = CycField::get(2);
  const int nv = n + 2;  // x_1..x_{n+1}, t
  const int t = n + 1;
  MPoly tvar = MPoly::variable(f, nv, t);
  MPoly base = MPoly::constant(f, nv, 1L);
  for (int s = 0; s <= n; ++s) base = base * (tvar - MPoly::variable(f, nv, s)).pow(m);
  std::vector<Derivation> out;
  for (int k = 0; k < n; ++k) {
    MPoly antiderivative = (tvar.pow(k) * base).integrate(t);
    std::vector<MPoly> at_x;
    for (int j = 0; j <= n; ++j) {
      std::vector<MPoly> images;
      for (int i = 0; i <= n; ++i) images.push_back(MPoly::variable(f, nv, i));
      images.push_back(MPoly::variable(f, nv, j));
      at_x.push_back(antiderivative.substitute(images).with_nvars(n + 1));
    }
    MPoly total(f, n + 1);
    for (const auto& v : at_x) total += v;
    std::vector<MPoly> comps;
    for (int i = 0; i <= n; ++i) comps.push_back(total - at_x[i] * CycScalar(f, static_cast<long>(n + 1)));
    out.emplace_back(std::move(comps));
  }
  return out;
}

Derivation restrict_to_sum_zero(const Derivation& ambient) {
  const int n = ambient.nvars() - 1;
  const CycField* f = ambient.field();
  MPoly last(f, n + 1);
  for (int i = 0; i < n; ++i) last -= MPoly::variable(f, n + 1, i);
  std::vector<MPoly> comps;
  for (int i = 0; i < n; ++i) comps.push_back(ambient.components[i].substitute_var(n, last).with_nvars(n));
  return Derivation(std::move(comps));
}

MultiArrangement sum_zero_braid_arrangement(int n, int mult) {
  const CycField* f = CycField::get(2);
  MultiArrangement arr{f, n, {}, {}, true, "A" + std::to_string(n) + " on sum x = 0"};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arr.add(MPoly::variable(f, n, i) - MPoly::variable(f, n, j), mult);
  for (int i = 0; i < n; ++i) {
    MPoly form = MPoly::variable(f, n, i);
    for (int k = 0; k < n; ++k) form += MPoly::variable(f, n, k);
    arr.add(form, mult);
  }
  return arr;
}

std::vector<Derivation> invariant_fields_from_filtered(const ReflectionGroup& g, const GradedSubspace& space,
                                                       Exec exec) {
  std::vector<MPoly> fresh;
  for (int d = 0; d <= space.cutoff(); ++d)
    for (auto& p : space.new_at(d)) fresh.push_back(p);
  std::vector<VectorElement> tuples(fresh.size());
  for_each_index(exec, static_cast<std::ptrdiff_t>(fresh.size()),
                 [&](std::ptrdiff_t i) { tuples[i] = equivariant_tuple(g, fresh[i], 0, Exec::kSerial); });
  std::vector<Derivation> out;
  for (auto& t : tuples) {
    Derivation L(std::move(t));
    if (!L.is_zero()) out.push_back(std::move(L));
  }
  return out;
}

std::vector<Derivation> catalan_basis(const ReflectionGroup& g, const MultFn& m, int cutoff, Exec exec) {
  GradedSubspace space = trig_quasi_space(g, m, cutoff, exec);
  return select_by_leading_terms(invariant_fields_from_filtered(g, space, exec), g.rank());
}

std::vector<Derivation> bc_catalan_basis(const ReflectionGroup& b_group, int m1, int m2, int m3, int cutoff,
                                         Exec exec) {
  if (b_group.spec().family != Family::kB) throw std::invalid_argument("BC Catalan fields need a group of type B");
  GradedSubspace space = bc_trig_quasi_space(b_group.rank(), m1, m2, m3, cutoff, exec);
  return select_by_leading_terms(invariant_fields_from_filtered(b_group, space, exec), b_group.rank());
}

bool DiagramReport::all_commute() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const DiagramEntry& e) { return e.commutes && e.top_in_dm && e.top_quasi; });
}

DiagramReport diagram_check(const ReflectionGroup& g, const MultFn& m, const std::vector<Derivation>& fields,
                            const ScalarVector& delta) {
  MPoly delta_form = MPoly::linear_form(delta);
  MultiArrangement dm = dm_arrangement(g, m);
  DiagramReport rep;
  for (const auto& L : fields) {
    DiagramEntry e{L, g.zero(), g.zero()};
    Derivation top = L.top_part();
    e.via_quasi = L.apply(delta_form).homogeneous_part(L.degree());
    e.via_derivation = top.apply(delta_form);
    e.commutes = e.via_quasi == e.via_derivation;
    e.top_in_dm = derivation_member(top, dm).ok;
    e.top_quasi = is_quasi_invariant(g, e.via_quasi, m);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

DiagramReport diagram_check(const ReflectionGroup& g, const MultFn& m, int cutoff, Exec exec) {
  GradedSubspace space = trig_quasi_space(g, m, cutoff, exec);
  return diagram_check(g, m, invariant_fields_from_filtered(g, space, exec), unit_vector(g.field(), g.rank(), 0));
}

}  // namespace qinv
