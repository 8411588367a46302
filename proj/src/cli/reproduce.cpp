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

#include "qinv/cli/reproduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qinv/exact/linalg.hpp"
#include "qinv/exact/parse.hpp"
#include "qinv/logder/transport.hpp"
#include "qinv/primitive/primitive.hpp"
#include "qinv/quasi/quasi.hpp"

namespace qinv {

bool Reproduction::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.pass; });
}

std::string Reproduction::to_text() const {
  std::ostringstream os;
  os << "example " << id << "\n";
  for (const auto& r : rows) os << "row " << r.name << " " << (r.pass ? "PASS" : "FAIL") << " " << r.detail << "\n";
  os << "verdict " << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::vector<std::string> example_ids() { return {"ex-g312", "ex-i26", "ex-bc2"}; }

MultFn mult_on_orbit_of(const ReflectionGroup& g, const MPoly& alpha, int on, int off) {
  MultFn m{std::vector<int>(g.num_orbits(), off)};
  bool found = false;
  for (const auto& h : g.hyperplanes())
    if (h.alpha == alpha.monic()) {
      m.per_orbit[h.orbit] = on;
      found = true;
    }
  if (!found) throw std::invalid_argument(alpha.to_string() + " is not a mirror of " + g.label());
  return m;
}

std::vector<MPoly> invariant_module_span(const ReflectionGroup& g, const std::vector<MPoly>& gens, int d, Exec exec) {
  std::vector<MPoly> out;
  for (const auto& p : gens) {
    if (p.is_zero() || p.degree() > d) continue;
    for (const auto& inv : invariant_space(g, d - p.degree(), exec)) out.push_back(inv * p);
  }
  return out;
}

std::vector<std::vector<MPoly>> tuple_module_span(const ReflectionGroup& g,
                                                  const std::vector<std::vector<MPoly>>& gens, int d,
                                                  bool invariant_coefficients, Exec exec) {
  std::vector<std::vector<MPoly>> out;
  for (const auto& t : gens) {
    Derivation L(t);
    if (L.is_zero() || L.degree() > d) continue;
    std::vector<MPoly> coeffs;
    if (invariant_coefficients) {
      coeffs = invariant_space(g, d - L.degree(), exec);
    } else {
      for (Monomial mono : monomials_of_degree(g.rank(), d - L.degree()))
        coeffs.push_back(MPoly::monomial(g.field(), g.rank(), mono, CycScalar(g.field(), 1L)));
    }
    for (const auto& c : coeffs) out.push_back(L.multiplied(c).components);
  }
  return out;
}

bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  const int ra = poly_rank(a);
  if (ra != poly_rank(b)) return false;
  std::vector<MPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return poly_rank(both) == ra;
}

namespace {

int tuple_rank(const std::vector<std::vector<MPoly>>& tuples) {
  if (tuples.empty()) return 0;
  EchelonBasis eb(tuples.front().front().field());
  MonomialIndexer idx;
  for (const auto& t : tuples) eb.insert(tuple_to_row(t, idx));
  return eb.rank();
}

}  // namespace

bool same_tuple_span(const std::vector<std::vector<MPoly>>& a, const std::vector<std::vector<MPoly>>& b) {
  const int ra = tuple_rank(a);
  if (ra != tuple_rank(b)) return false;
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return tuple_rank(both) == ra;
}

namespace {

std::vector<std::vector<MPoly>> components_of(const std::vector<Derivation>& fields) {
  std::vector<std::vector<MPoly>> out;
  for (const auto& f : fields) out.push_back(f.components);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

/// Degree-by-degree span comparison; detail names the first mismatching degree.
template <typename Computed, typename Expected, typename Same>
ReproRow span_row(const std::string& name, int lo, int hi, Computed computed, Expected expected, Same same) {
  ReproRow row{name, true, "span equal for degrees " + std::to_string(lo) + ".." + std::to_string(hi)};
  for (int d = lo; d <= hi; ++d) {
    auto c = computed(d);
    auto e = expected(d);
    if (!same(c, e)) {
      row.pass = false;
      row.detail = "degree " + std::to_string(d) + ": computed dim " + std::to_string(c.size()) +
                   ", reference span differs";
      return row;
    }
  }
  return row;
}

ReproRow certificate_row(const std::string& name, const FreenessCertificate& cert, const std::vector<int>& exps) {
  ReproRow row{name, cert.pass && cert.exponents == exps, ""};
  row.detail = "exponents " + join(cert.exponents) + " expected " + join(exps) + "; " + cert.reason;
  return row;
}

MPoly swap12(const MPoly& p) { return p.permute_vars({1, 0}, 2); }

Reproduction reproduce_g312(Exec exec) {
  const ReflectionGroup g = ReflectionGroup::build(GroupSpec::complex_monomial(3, 2));
  auto P = [&](const char* s) { return parse_poly(s, g.field(), 2); };
  MultFn m = MultFn::constant(g, 1);
  Reproduction rep{"ex-g312", {}};

  std::vector<MPoly> ys{P("x1^3 + x2^3"), P("x1^3*x2^3")};
  {
    BasicInvariants ours = basic_invariants(g, exec);
    bool ok = ours.degrees == std::vector<int>{3, 6};
    std::string detail = "degrees " + join(ours.degrees);
    try {
      basic_invariants_from(g, ys);
    } catch (const PrimitiveError& e) {
      ok = false;
      detail += "; reference invariants rejected: " + std::string(e.what());
    }
    rep.rows.push_back({"basic_invariants", ok, detail});
  }

  std::vector<MPoly> qv{P("x1^7 - 7*x1^4*x2^3"), P("-7*x1^3*x2^4 + x2^7"), P("x1^10 + 5*x1^4*x2^6"),
                        P("5*x1^6*x2^4 + x2^10")};
  rep.rows.push_back(span_row(
      "Q1_Vstar_basis", 0, 13, [&](int d) { return quasi_isotypic(g, m, d, vstar_character(g), 2, exec); },
      [&](int d) { return invariant_module_span(g, qv, d, exec); }, same_span));

  std::vector<std::vector<MPoly>> vq{{P("x1^3*(x1^3 - 4*x2^3)"), P("-3*x1^2*x2^4")},
                                     {P("3*x1^4*x2^2"), P("x2^3*(4*x1^3 - x2^3)")}};
  rep.rows.push_back(span_row(
      "Q1_V_basis", 0, 9, [&](int d) { return vector_quasi_space(g, m, d, exec); },
      [&](int d) { return tuple_module_span(g, vq, d, false, exec); }, same_tuple_span));

  std::vector<Derivation> dm{Derivation({P("x1^4*(x1^3 - 7*x2^3)"), P("x2^4*(x2^3 - 7*x1^3)")}),
                             Derivation({P("x1^4*(x1^6 + 5*x2^6)"), P("x2^4*(5*x1^6 + x2^6)")})};
  rep.rows.push_back(span_row(
      "D1_invariant_basis", 0, 13, [&](int d) { return components_of(dm_invariant_fields(g, m, d, exec)); },
      [&](int d) { return tuple_module_span(g, components_of(dm), d, true, exec); }, same_tuple_span));
  rep.rows.push_back(certificate_row("D1_saito", saito_certificate(dm_arrangement(g, m), dm), {7, 10}));

  std::vector<Derivation> dt{Derivation(vq[0]), Derivation(vq[1])};
  rep.rows.push_back(span_row(
      "Dtilde1_basis", 0, 9, [&](int d) { return components_of(dtilde_fields(g, m, d, exec)); },
      [&](int d) { return tuple_module_span(g, components_of(dt), d, false, exec); }, same_tuple_span));
  rep.rows.push_back(certificate_row("Dtilde1_saito", saito_certificate(dtilde_arrangement(g, m), dt), {6, 6}));

  rep.rows.push_back(certificate_row("D1_certificate", certify_dm(g, m, exec), {7, 10}));
  rep.rows.push_back(certificate_row("Dtilde1_certificate", certify_dtilde(g, m, exec), {6, 6}));
  Rational cv = cv_degree(g, m);
  rep.rows.push_back({"c_V", cv == 6, "c_V(m) = " + cv.get_str()});
  return rep;
}

Reproduction reproduce_i26(Exec exec) {
  const ReflectionGroup g = ReflectionGroup::build(GroupSpec::dihedral(6));
  auto P = [&](const char* s) { return parse_poly(s, g.field(), 2); };
  Reproduction rep{"ex-i26", {}};
  struct Case {
    std::string name;
    MultFn m;
    int degree;
    int det_degree;
    std::vector<Derivation> fields;
  };
  std::vector<Case> cases{
      {"L_11", MultFn::constant(g, 1), 6, 12,
       {Derivation({P("1/5*x1^6 - 2*x1^4*x2^2 + x1^2*x2^4"), P("-4/3*x1^3*x2^3 + 4/5*x1*x2^5")}),
        Derivation({P("-3/5*x1^5*x2 + x1^3*x2^3"), P("-3/4*x1^4*x2^2 + 3/2*x1^2*x2^4 - 3/20*x2^6")})}},
      {"L_21", mult_on_orbit_of(g, P("x1"), 2, 1), 9, 18,
       {Derivation({P("1/7*x1^8*x2 + 26/15*x1^6*x2^3 - x1^4*x2^5"),
                    P("1/2*x1^7*x2^2 + 1/2*x1^5*x2^4 - 1/2*x1^3*x2^6 - 3/70*x1*x2^8")}),
        Derivation({P("1/7*x1^9 - 22/7*x1^7*x2^2 - x1^5*x2^4"),
                    P("-25/6*x1^6*x2^3 + 9/2*x1^4*x2^5 - 51/14*x1^2*x2^7 + 9/14*x2^9")})}},
  };
  for (const auto& c : cases) {
    MultiArrangement arr = dtilde_arrangement(g, c.m);
    bool members = std::all_of(c.fields.begin(), c.fields.end(),
                               [&](const Derivation& L) { return derivation_member(L, arr).ok; });
    rep.rows.push_back({c.name + "_membership", members, "m = " + c.m.to_string()});
    rep.rows.push_back(span_row(
        c.name + "_span", c.degree, c.degree + 2,
        [&](int d) { return components_of(dtilde_fields(g, c.m, d, exec)); },
        [&](int d) { return tuple_module_span(g, components_of(c.fields), d, false, exec); }, same_tuple_span));
    FreenessCertificate cert = saito_certificate(arr, c.fields);
    const int det_degree = cert.determinant.is_zero() ? -1 : cert.determinant.degree();
    rep.rows.push_back({c.name + "_saito", cert.pass && det_degree == c.det_degree,
                        "determinant degree " + std::to_string(det_degree) + " expected " +
                            std::to_string(c.det_degree) + "; " + cert.reason});
  }
  return rep;
}

Reproduction reproduce_bc2(Exec exec) {
  const ReflectionGroup g = ReflectionGroup::build(GroupSpec::type_b(2));
  const CycField* f = bc_field();
  auto P = [&](const char* s) { return parse_poly(s, f, 2); };
  Reproduction rep{"ex-bc2", {}};
  MultFn m = mult_on_orbit_of(g, P("x1"), 2, 1);

  MPoly p1 = P("3*x1^7 - 7*x1^5*x2^2"), q1 = P("5*x1^9 - 9*x1^7*x2^2");
  bool homog = true;
  for (const auto& p : {p1, q1}) homog = homog && is_quasi_invariant(g, p, m) && vstar_project(g, p, exec) == p;
  rep.rows.push_back({"p1_q1_quasi_invariant", homog, "m = " + m.to_string()});
  std::vector<Derivation> theta{Derivation({p1, swap12(p1)}), Derivation({q1, swap12(q1)})};
  rep.rows.push_back(certificate_row("theta_saito", saito_certificate(dm_arrangement(g, m), theta), {7, 9}));

  MPoly p1t = P("3*x1^7 - 7*x1^5*x2^2 - 14*x1^5 + 35*x1^3*x2^2 + 7*x1^3 - 28*x1*x2^2 + 4*x1");
  MPoly q1t = P("5*x1^9 - 9*x1^7*x2^2 - 42*x1^7 + 63*x1^5*x2^2 + 105*x1^5 - 126*x1^3*x2^2 - 68*x1^3 + 72*x1*x2^2");
  auto trig = trig_conditions(g, m);
  bool trig_ok = satisfies_shift_conditions(p1t, trig) && satisfies_shift_conditions(q1t, trig) &&
                 p1t.top_part() == p1 && q1t.top_part() == q1;
  rep.rows.push_back({"p1'_q1'_trigonometric", trig_ok, "shift conditions and leading terms"});

  MPoly pbc = P("3*x1^7 - 7*x1^5*x2^2 + 1/4*(-35*x1^5 + 35*x1^3*x2^2 + 28*x1^3 - 7*x1*x2^2 - 5*x1)");
  MPoly qbc = P(
      "5*x1^9 - 9*x1^7*x2^2 + 1/4*(-57*x1^7 - 7*x1^5*x2^2 + 49*x1^5 + 56*x1^3*x2^2 - 13*x1^3 - 13*x1*x2^2 + x1)");
  auto bc = bc_conditions(2, 1, 1, 1);
  bool bc_ok = satisfies_shift_conditions(pbc, bc) && satisfies_shift_conditions(qbc, bc);
  rep.rows.push_back({"p~_q~_BC_trigonometric", bc_ok, "BC shift conditions for (1,1,1)"});

  std::vector<Derivation> theta_t{Derivation({p1t, swap12(p1t)}), Derivation({q1t, swap12(q1t)})};
  MultiArrangement cat = catalan_arrangement(g, m);
  rep.rows.push_back(certificate_row("Cat_affine", affine_free_check(cat, theta_t), {7, 9}));
  rep.rows.push_back(certificate_row("cCat", coned_free_check(cat, theta_t), {1, 7, 9}));

  std::vector<Derivation> theta_bc{Derivation({pbc, swap12(pbc)}), Derivation({qbc, swap12(qbc)})};
  MultiArrangement bcc = bc_catalan(2, 1, 1, 1);
  FreenessCertificate cbc = coned_free_check(bcc, theta_bc);
  rep.rows.push_back(certificate_row("cBCCat", cbc, {1, 7, 9}));

  FreenessCertificate dm = certify_dm(g, m, exec);
  std::vector<int> with_one = dm.exponents;
  with_one.push_back(1);
  std::sort(with_one.begin(), with_one.end());
  rep.rows.push_back({"cBCCat_exponents_from_B2", dm.pass && with_one == cbc.exponents,
                      "D_m(B2) exponents " + join(dm.exponents) + " plus 1 vs " + join(cbc.exponents)});
  return rep;
}

}  // namespace

Reproduction reproduce_example(const std::string& id, Exec exec) {
  if (id == "ex-g312") return reproduce_g312(exec);
  if (id == "ex-i26") return reproduce_i26(exec);
  if (id == "ex-bc2") return reproduce_bc2(exec);
  throw std::invalid_argument("unknown example '" + id + "'");
}

}  // namespace qinv
