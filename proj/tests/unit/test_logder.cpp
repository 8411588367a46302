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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "qinv/exact/linalg.hpp"
#include "qinv/exact/parse.hpp"
#include "qinv/exact/polymatrix.hpp"
#include "qinv/logder/transport.hpp"
#include "test_support.hpp"

using namespace qinv;
using qinv::testing::cached_group;
using qinv::testing::check_golden;
using qinv::testing::random_poly;
using qinv::testing::random_scalar;

namespace {

MPoly P(const ReflectionGroup& g, const char* s) { return parse_poly(s, g.field(), g.rank()); }
MPoly PB(const char* s, int n = 2) { return parse_poly(s, bc_field(), n); }

MPoly swap12(const MPoly& p) { return p.permute_vars({1, 0}, 2); }

int tuple_rank(const std::vector<std::vector<MPoly>>& tuples) {
  if (tuples.empty()) return 0;
  EchelonBasis eb(tuples.front().front().field());
  MonomialIndexer idx;
  for (const auto& t : tuples) eb.insert(tuple_to_row(t, idx));
  return eb.rank();
}

bool tuple_in_span(const std::vector<std::vector<MPoly>>& family, const std::vector<MPoly>& target) {
  auto ext = family;
  ext.push_back(target);
  return tuple_rank(ext) == tuple_rank(family);
}

std::vector<std::vector<MPoly>> components_of(const std::vector<Derivation>& fields) {
  std::vector<std::vector<MPoly>> out;
  for (const auto& f : fields) out.push_back(f.components);
  return out;
}

MultFn orbit_mult_with(const ReflectionGroup& g, const MPoly& alpha, int on, int off) {
  MultFn m{std::vector<int>(g.num_orbits(), off)};
  for (const auto& h : g.hyperplanes())
    if (h.alpha == alpha) m.per_orbit[h.orbit] = on;
  return m;
}

/// Subspace of span(fields) whose members lie in D(arr) for an arrangement with all r = 1:
/// L(alpha) restricted to alpha = 0 must vanish, imposed coefficientwise.
int membership_kernel_dim(const std::vector<Derivation>& fields, const MultiArrangement& arr) {
  if (fields.empty()) return 0;
  const CycField* f = arr.field;
  const int n = arr.nvars;
  MonomialIndexer idx;
  std::vector<std::vector<SparseEntry>> cols(fields.size());
  for (int h = 0; h < arr.size(); ++h) {
    REQUIRE(arr.multiplicity[h] == 1);
    ScalarVector a = arr.forms[h].linear_coefficients();
    int k = 0;
    while (a[k].is_zero()) ++k;
    MPoly solved = MPoly::constant(f, n, -arr.forms[h].constant_term());
    for (int i = 0; i < n; ++i)
      if (i != k) solved -= MPoly::variable(f, n, i) * a[i];
    solved *= a[k].inverse();
    for (size_t c = 0; c < fields.size(); ++c) {
      MPoly r = fields[c].apply(arr.forms[h]).substitute_var(k, solved);
      for (const auto& t : r.terms()) cols[c].push_back({idx.index(h, t.mono), t.coef});
    }
  }
  std::vector<SparseRow> rows(idx.size());
  for (size_t c = 0; c < fields.size(); ++c)
    for (auto& e : cols[c]) rows[e.col].push_back({static_cast<int>(c), e.val});
  return static_cast<int>(nullspace(f, static_cast<int>(fields.size()), rows).size());
}

}  // namespace

TEST_CASE("derivations: basic operations and membership") {
  const auto& g = cached_group("B2");
  Derivation e = euler_field(g.field(), 2);
  for (const std::string tag : {"A2", "B2", "G3_1_2", "I2(6)"}) {
    const auto& gg = cached_group(tag);
    MultiArrangement arr = reflection_multiarrangement(gg, MultFn::constant(gg, 0), 1);
    CHECK(derivation_member(euler_field(gg.field(), gg.rank()), arr).ok);
  }
  CHECK(e.apply(P(g, "x1^2*x2")) == P(g, "3*x1^2*x2"));
  CHECK(e.degree() == 1);
  CHECK(e.is_homogeneous());
  Derivation z = Derivation::zero(g.field(), 2);
  CHECK(z.is_zero());
  CHECK(z.degree() == kDegreeNegInf);
  CHECK(z.to_string() == "0");
  Derivation mixed({P(g, "x1^2 + x1"), P(g, "x2")});
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK(mixed.top_part() == Derivation({P(g, "x1^2"), g.zero()}));

  // The B2 arrangement with r = 3 rejects the Euler field with a witness.
  MultiArrangement b2 = dm_arrangement(g, MultFn::constant(g, 1));
  MembershipWitness w = derivation_member(e, b2);
  CHECK_FALSE(w.ok);
  CHECK(w.exponent == 1);
  CHECK(w.required == 3);
}

TEST_CASE("derivations: invariance and Theta on the G(3,1,2) example") {
  const auto& g = cached_group("G3_1_2");
  MultFn m = MultFn::constant(g, 1);
  MultiArrangement dm = dm_arrangement(g, m);
  std::vector<int> mult = dm.multiplicity;
  std::sort(mult.begin(), mult.end());
  CHECK(mult == std::vector<int>{3, 3, 3, 4, 4});

  Derivation first({P(g, "x1^4*(x1^3 - 7*x2^3)"), P(g, "x2^4*(x2^3 - 7*x1^3)")});
  Derivation second({P(g, "x1^4*(x1^6 + 5*x2^6)"), P(g, "x2^4*(5*x1^6 + x2^6)")});
  CHECK(derivation_member(first, dm).ok);
  CHECK(derivation_member(second, dm).ok);
  CHECK(is_invariant_derivation(g, first));
  CHECK(is_invariant_derivation(g, second));

  auto d7 = dm_invariant_fields(g, m, 7);
  REQUIRE(d7.size() == 1);
  CHECK(tuple_rank({d7[0].components, first.components}) == 1);
  auto d10 = dm_invariant_fields(g, m, 10);
  CHECK(d10.size() == 2);
  CHECK(tuple_in_span(components_of(d10), second.components));
  CHECK(dm_invariant_fields(g, m, 6).empty());

  // Zero map to zero field, and round trip on every Hom basis element.
  VectorElement zero_map(2, g.zero());
  CHECK(theta_from_hom(g, m, zero_map).is_zero());
  for (int d : {7, 8, 9, 10})
    for (const auto& phi : hom_space(g, m, d)) CHECK(theta_inverse(theta_from_hom(g, m, phi)) == phi);

  // A non-invariant tuple is rejected.
  CHECK_THROWS_AS(theta_from_hom(g, m, {P(g, "x1^7 - 7*x1^4*x2^3"), g.zero()}), std::logic_error);
}

TEST_CASE("derivations: rho on the G(3,1,2) and I2(6) examples") {
  const auto& g = cached_group("G3_1_2");
  MultFn m = MultFn::constant(g, 1);
  Derivation a({P(g, "x1^3*(x1^3 - 4*x2^3)"), P(g, "-3*x1^2*x2^4")});
  Derivation b({P(g, "3*x1^4*x2^2"), P(g, "x2^3*(4*x1^3 - x2^3)")});
  CHECK(rho_from_vector_quasi(g, m, a.components) == a);
  CHECK(rho_from_vector_quasi(g, m, b.components) == b);
  auto fields = dtilde_fields(g, m, 6);
  CHECK(fields.size() == 2);
  CHECK(tuple_rank(components_of(fields)) == tuple_rank({a.components, b.components, fields[0].components,
                                                         fields[1].components}));
  CHECK(rho_from_vector_quasi(g, m, VectorElement(2, g.zero())).is_zero());
  CHECK_THROWS_AS(rho_from_vector_quasi(g, m, {P(g, "x1^6"), g.zero()}), std::logic_error);

  const auto& i26 = cached_group("I2(6)");
  MultFn m11 = MultFn::constant(i26, 1);
  MultFn m21 = orbit_mult_with(i26, P(i26, "x1"), 2, 1);
  Derivation l1({P(i26, "1/5*x1^6 - 2*x1^4*x2^2 + x1^2*x2^4"), P(i26, "-4/3*x1^3*x2^3 + 4/5*x1*x2^5")});
  Derivation l2({P(i26, "-3/5*x1^5*x2 + x1^3*x2^3"), P(i26, "-3/4*x1^4*x2^2 + 3/2*x1^2*x2^4 - 3/20*x2^6")});
  Derivation k1({P(i26, "1/7*x1^8*x2 + 26/15*x1^6*x2^3 - x1^4*x2^5"),
                 P(i26, "1/2*x1^7*x2^2 + 1/2*x1^5*x2^4 - 1/2*x1^3*x2^6 - 3/70*x1*x2^8")});
  Derivation k2({P(i26, "1/7*x1^9 - 22/7*x1^7*x2^2 - x1^5*x2^4"),
                 P(i26, "-25/6*x1^6*x2^3 + 9/2*x1^4*x2^5 - 51/14*x1^2*x2^7 + 9/14*x2^9")});
  MultiArrangement t11 = dtilde_arrangement(i26, m11);
  MultiArrangement t21 = dtilde_arrangement(i26, m21);
  CHECK(derivation_member(l1, t11).ok);
  CHECK(derivation_member(l2, t11).ok);
  CHECK(derivation_member(k1, t21).ok);
  CHECK(derivation_member(k2, t21).ok);
  auto f6 = components_of(dtilde_fields(i26, m11, 6));
  auto f9 = components_of(dtilde_fields(i26, m21, 9));
  CHECK(f6.size() == 2);
  CHECK(f9.size() == 2);
  CHECK(tuple_rank({l1.components, l2.components}) == 2);
  CHECK(tuple_in_span(f6, l1.components));
  CHECK(tuple_in_span(f6, l2.components));
  CHECK(tuple_in_span(f9, k1.components));
  CHECK(tuple_in_span(f9, k2.components));
  auto c11 = saito_certificate(t11, {l1, l2});
  auto c21 = saito_certificate(t21, {k1, k2});
  CHECK(c11.pass);
  CHECK(c21.pass);
  CHECK(c11.determinant.degree() == 12);
  CHECK(c21.determinant.degree() == 18);
}

TEST_CASE("freeness: certificates for the worked examples") {
  const auto& g = cached_group("G3_1_2");
  MultFn m = MultFn::constant(g, 1);
  auto dm = certify_dm(g, m);
  CHECK(dm.pass);
  CHECK(dm.exponents == std::vector<int>{7, 10});
  CHECK(dm.target_degree == 17);
  CHECK_FALSE(dm.scalar.is_zero());
  auto dt = certify_dtilde(g, m);
  CHECK(dt.pass);
  CHECK(dt.exponents == std::vector<int>{6, 6});
  CHECK(dt.target_degree == 12);

  const auto& i26 = cached_group("I2(6)");
  auto t21 = certify_dtilde(i26, orbit_mult_with(i26, P(i26, "x1"), 2, 1));
  CHECK(t21.pass);
  CHECK(t21.exponents == std::vector<int>{9, 9});

  check_golden(QINV_GOLDEN_DIR, "g312_dm_m1.cert", serialize_certificate(dm));
  check_golden(QINV_GOLDEN_DIR, "g312_dtilde_m1.cert", serialize_certificate(dt));
  check_golden(QINV_GOLDEN_DIR, "i26_dtilde_m21.cert", serialize_certificate(t21));
}

TEST_CASE("freeness: failures are reported, not thrown") {
  const auto& g = cached_group("B2");
  MultiArrangement arr = dm_arrangement(g, MultFn::constant(g, 1));
  auto short_list = saito_certificate(arr, {euler_field(g.field(), 2)});
  CHECK_FALSE(short_list.pass);
  auto not_member = saito_certificate(arr, {euler_field(g.field(), 2), euler_field(g.field(), 2)});
  CHECK_FALSE(not_member.pass);
  CHECK(not_member.reason.find("not logarithmic") != std::string::npos);
  MultiArrangement plain = reflection_multiarrangement(g, MultFn::constant(g, 0), 1);
  auto dependent = saito_certificate(plain, {euler_field(g.field(), 2), euler_field(g.field(), 2)});
  CHECK_FALSE(dependent.pass);
  CHECK(dependent.reason.find("rank at sample point 1") != std::string::npos);
  // Cutoff below the top exponent.
  auto cut = free_basis(arr, [&](int d) { return dm_invariant_fields(g, MultFn::constant(g, 1), d); }, 0, 6);
  CHECK_FALSE(cut.pass);
  CHECK(cut.reason.find("cutoff 6") != std::string::npos);
}

TEST_CASE("freeness: degree bookkeeping across groups") {
  for (const std::string tag : {"A2", "A3", "B2", "B3", "I2(6)", "G3_1_2"}) {
    const auto& g = cached_group(tag);
    std::vector<MultFn> mults;
    for (int c : {0, 1, 2}) mults.push_back(MultFn::constant(g, c));
    if (g.num_orbits() == 2) mults.push_back(MultFn{{2, 1}});
    for (const auto& m : mults) {
      CAPTURE(tag);
      CAPTURE(m.to_string());
      auto dm = certify_dm(g, m, Exec::kSerial);
      auto dt = certify_dtilde(g, m, Exec::kSerial);
      REQUIRE(dm.pass);
      REQUIRE(dt.pass);
      const int mn = weighted_hyperplane_sum(g, m);
      const int nh = static_cast<int>(g.hyperplanes().size());
      CHECK(dm.exponent_sum() == mn + nh);
      CHECK(dt.exponent_sum() == mn);
      Rational cv = cv_degree(g, m);
      for (int e : dt.exponents) CHECK(Rational(e) == cv);
      Rational total(0);
      for (const auto& b : appearance_degrees(g, m, dm.exponents)) total += b;
      CHECK(total == nh);
    }
  }
}

TEST_CASE("freeness: structured output does not depend on the thread count") {
  const auto& g = cached_group("B3");
  MultFn m{{2, 1}};
  set_thread_count(1);
  std::string one = serialize_certificate(certify_dm(g, m, Exec::kParallel));
  set_thread_count(4);
  std::string four = serialize_certificate(certify_dm(g, m, Exec::kParallel));
  std::string serial = serialize_certificate(certify_dm(g, m, Exec::kSerial));
  CHECK(one == four);
  CHECK(one == serial);
}

TEST_CASE("symmetric group integral fields") {
  auto s2 = symmetric_integral_basis(1, 1);
  REQUIRE(s2.size() == 1);
  const CycField* f = CycField::get(2);
  MPoly cube = parse_poly("(x2 - x1)^3", f, 2);
  CHECK(s2[0].components[0] == cube * CycScalar(f, Rational(-1, 6)));
  CHECK(s2[0].components[1] == cube * CycScalar(f, Rational(1, 6)));

  for (int n : {2, 3}) {
    const auto& amb = cached_group("S" + std::to_string(n + 1));
    for (int m : {0, 1}) {
      auto fields = symmetric_integral_basis(n, m);
      REQUIRE(static_cast<int>(fields.size()) == n);
      MultiArrangement ambient = reflection_multiarrangement(amb, MultFn::constant(amb, m), 1);
      std::vector<Derivation> restricted;
      for (const auto& L : fields) {
        CHECK(is_invariant_derivation(amb, L));
        CHECK(derivation_member(L, ambient).ok);
        MPoly sum(f, n + 1);
        for (const auto& c : L.components) sum += c;
        CHECK(sum.is_zero());
        restricted.push_back(restrict_to_sum_zero(L));
      }
      auto cert = saito_certificate(sum_zero_braid_arrangement(n, 2 * m + 1), restricted);
      CHECK(cert.pass);
      if (n == 2 && m == 0) CHECK(cert.exponents == std::vector<int>{1, 2});
      if (n == 2 && m == 1) CHECK(cert.determinant.degree() == 9);
    }
  }
}

TEST_CASE("Catalan arrangements and coning") {
  const auto& a2 = cached_group("A2");
  CHECK(catalan_arrangement(a2, MultFn::constant(a2, 1)).size() == 9);
  CHECK_THROWS(catalan_arrangement(cached_group("G3_1_2"), MultFn{{1, 1}}));

  // BC2 (1,1,1): every factor of the defining polynomial appears exactly once.
  MultiArrangement bc = bc_catalan(2, 1, 1, 1);
  CHECK(bc.size() == 16);
  CHECK_FALSE(bc.central);
  MPoly expected = PB("1");
  for (const char* s : {"x1*(x1^2 - 1)*(4*x1^2 - 1)", "x2*(x2^2 - 1)*(4*x2^2 - 1)", "(x1 - x2)*((x1 - x2)^2 - 1)",
                        "(x1 + x2)*((x1 + x2)^2 - 1)"})
    expected = expected * PB(s);
  MPoly got = bc.defining_polynomial();
  CHECK(got * got.leading_term().coef.inverse() == expected * expected.leading_term().coef.inverse());
  for (int m : bc.multiplicity) CHECK(m == 1);

  auto fx = parse_arrangement_fixture(deconing_fixture_text(), bc_field());
  MultiArrangement c = cone(fx.arrangement);
  CHECK(c.central);
  CHECK(c.defining_polynomial() == parse_poly("x1*x2*x3*(x1 + x2 + x3)", bc_field(), 3));
  auto from_file = read_arrangement_fixture(std::string(QINV_FIXTURE_DIR) + "/deconing.arr", bc_field());
  CHECK(from_file.arrangement.canonical_text() == fx.arrangement.canonical_text());
  CHECK(from_file.derivations == fx.derivations);
  CHECK_THROWS_AS(parse_arrangement_fixture("hyperplane x1\n", bc_field()), ParseError);
}

TEST_CASE("coning derivations") {
  const CycField* f = bc_field();
  Derivation d1({PB("1"), PB("0")});
  Derivation d1c = cone_derivation(d1);
  CHECK(d1c == Derivation({parse_poly("1", f, 3), parse_poly("0", f, 3), parse_poly("0", f, 3)}));
  auto fx = parse_arrangement_fixture(deconing_fixture_text(), f);
  Derivation t1c = cone_derivation(fx.derivations[0]);
  CHECK(t1c.components[0] == parse_poly("x1*(x1 + x3)", f, 3));
  CHECK(t1c.components[1] == parse_poly("x1*x2", f, 3));
  CHECK(decone_derivation(t1c) == fx.derivations[0]);

  auto affine = affine_free_check(fx.arrangement, fx.derivations);
  CHECK(affine.pass);
  auto coned = coned_free_check(fx.arrangement, fx.derivations);
  CHECK_FALSE(coned.pass);
  CHECK(coned.determinant == parse_poly("x1*x2*x3^2*(x1 + x2 + x3)", f, 3));
  CHECK(coned.residual == parse_poly("x3", f, 3));
  check_golden(QINV_GOLDEN_DIR, "deconing_cone.cert", serialize_certificate(coned));
}

TEST_CASE("Catalan freeness on the B2 and BC2 examples") {
  const auto& b2 = cached_group("B2");
  MultFn m{{2, 1}};
  REQUIRE(b2.hyperplanes()[b2.orbits()[0][0]].alpha == PB("x1"));
  MPoly p1 = PB("3*x1^7 - 7*x1^5*x2^2 - 14*x1^5 + 35*x1^3*x2^2 + 7*x1^3 - 28*x1*x2^2 + 4*x1");
  MPoly q1 = PB("5*x1^9 - 9*x1^7*x2^2 - 42*x1^7 + 63*x1^5*x2^2 + 105*x1^5 - 126*x1^3*x2^2 - 68*x1^3 + 72*x1*x2^2");
  std::vector<Derivation> fields{Derivation({p1, swap12(p1)}), Derivation({q1, swap12(q1)})};
  MultiArrangement cat = catalan_arrangement(b2, m);
  CHECK(cat.size() == 16);
  for (const auto& L : fields) {
    CHECK(is_invariant_derivation(b2, L));
    CHECK(derivation_member(L, cat).ok);
  }
  // The coned field restricted to z = 1 is the original.
  CHECK(decone_derivation(cone_derivation(fields[0])) == fields[0]);
  auto affine = affine_free_check(cat, fields);
  CHECK(affine.pass);
  auto coned = coned_free_check(cat, fields);
  CHECK(coned.pass);
  CHECK(coned.exponents == std::vector<int>{1, 7, 9});
  check_golden(QINV_GOLDEN_DIR, "b2_ccat_m21.cert", serialize_certificate(coned));

  auto ours = catalan_basis(b2, m, 9);
  REQUIRE(ours.size() == 2);
  CHECK(coned_free_check(cat, ours).pass);

  MPoly pt = PB("3*x1^7 - 7*x1^5*x2^2 + 1/4*(-35*x1^5 + 35*x1^3*x2^2 + 28*x1^3 - 7*x1*x2^2 - 5*x1)");
  MPoly qt = PB(
      "5*x1^9 - 9*x1^7*x2^2 + 1/4*(-57*x1^7 - 7*x1^5*x2^2 + 49*x1^5 + 56*x1^3*x2^2 - 13*x1^3 - 13*x1*x2^2 + x1)");
  std::vector<Derivation> bc_fields{Derivation({pt, swap12(pt)}), Derivation({qt, swap12(qt)})};
  MultiArrangement bc = bc_catalan(2, 1, 1, 1);
  auto bc_cert = coned_free_check(bc, bc_fields);
  CHECK(bc_cert.pass);
  CHECK(bc_cert.exponents == std::vector<int>{1, 7, 9});
  check_golden(QINV_GOLDEN_DIR, "bc2_cbccat_m111.cert", serialize_certificate(bc_cert));
  auto bc_ours = bc_catalan_basis(b2, 1, 1, 1, 9);
  CHECK(coned_free_check(bc, bc_ours).pass);

  // Exponents of the cone are those of D_m for B2 with the induced multiplicity, plus 1.
  auto induced = certify_dm(b2, MultFn{{2, 1}});
  std::vector<int> with_one = induced.exponents;
  with_one.insert(with_one.begin(), 1);
  CHECK(with_one == bc_cert.exponents);
}

TEST_CASE("commutative square between Catalan fields and leading terms") {
  const auto& a2 = cached_group("A2");
  auto trivial = diagram_check(a2, MultFn::constant(a2, 0), 5);
  CHECK_FALSE(trivial.entries.empty());
  CHECK(trivial.all_commute());
  auto one = diagram_check(a2, MultFn::constant(a2, 1), 8);
  CHECK(one.entries.size() >= 2);
  CHECK(one.all_commute());

  const auto& b2 = cached_group("B2");
  MultFn m{{2, 1}};
  MPoly p1 = PB("3*x1^7 - 7*x1^5*x2^2 - 14*x1^5 + 35*x1^3*x2^2 + 7*x1^3 - 28*x1*x2^2 + 4*x1");
  auto rep = diagram_check(b2, m, {Derivation({p1, swap12(p1)})}, unit_vector(bc_field(), 2, 0));
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.all_commute());
  CHECK(rep.entries[0].via_quasi == PB("3*x1^7 - 7*x1^5*x2^2"));
  CHECK(rep.entries[0].via_derivation == PB("3*x1^7 - 7*x1^5*x2^2"));
  CHECK(diagram_check(b2, m, 9).all_commute());
}

TEST_CASE("Catalan fields match the trigonometric Hom spaces per filtration degree") {
  for (const std::string tag : {"A2", "B2"}) {
    const auto& g = cached_group(tag);
    MultFn m = tag == "B2" ? MultFn{{2, 1}} : MultFn::constant(g, 1);
    MultiArrangement cat = catalan_arrangement(g, m);
    const int cutoff = 8;
    GradedSubspace trig = trig_quasi_space(g, m, cutoff);
    auto cat_fields = invariant_fields_from_filtered(g, trig);
    // All invariant fields of degree <= cutoff, by averaging monomials.
    std::vector<Derivation> all_invariant;
    for (int d = 0; d <= cutoff; ++d)
      for (Monomial mono : monomials_of_degree(g.rank(), d)) {
        Derivation L(equivariant_tuple(g, MPoly::monomial(g.field(), g.rank(), mono, CycScalar(g.field(), 1L))));
        if (!L.is_zero()) all_invariant.push_back(L);
      }
    for (int d = 0; d <= cutoff; ++d) {
      CAPTURE(tag);
      CAPTURE(d);
      std::vector<Derivation> upto, ours;
      for (const auto& L : all_invariant)
        if (L.degree() <= d) upto.push_back(L);
      for (const auto& L : cat_fields)
        if (L.degree() <= d) ours.push_back(L);
      // Reduce the spanning family before the kernel computation.
      auto reduced = reduced_echelon_tuples(components_of(upto));
      std::vector<Derivation> basis;
      for (auto& t : reduced) basis.emplace_back(std::move(t));
      CHECK(membership_kernel_dim(basis, cat) == tuple_rank(components_of(ours)));
    }
  }
}

TEST_CASE("property: Theta round trips and the quasi-invariance criterion for invariant fields") {
  std::mt19937_64 rng(20260101);
  const std::vector<std::string> tags{"A2", "B2", "G3_1_2", "I2(6)"};
  int cases = 0;
  for (int iter = 0; iter < 240; ++iter) {
    const auto& g = cached_group(tags[iter % tags.size()]);
    MultFn m = MultFn::constant(g, 1);
    const int d = 3 + static_cast<int>(rng() % 6);
    auto q = quasi_space(g, m, d, Exec::kSerial);
    MPoly seed = g.zero();
    for (const auto& b : q) seed.add_scaled(b, random_scalar(g.field(), rng, 3));
    if (rng() % 2) seed += random_poly(g.field(), g.rank(), d, 3, rng).homogeneous_part(d);
    VectorElement phi = equivariant_tuple(g, seed, 0, Exec::kSerial);
    Derivation L(phi);
    CHECK(is_invariant_derivation(g, L));
    CHECK(theta_inverse(L) == phi);
    bool comps_quasi = std::all_of(phi.begin(), phi.end(), [&](const MPoly& p) { return is_quasi_invariant(g, p, m); });
    CHECK(derivation_member(L, dm_arrangement(g, m)).ok == comps_quasi);
    // rho round trip on the same tuple when it is vector quasi-invariant.
    if (is_vector_quasi_invariant(g, phi, m)) CHECK(rho_from_vector_quasi(g, m, phi).components == phi);
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("property: vanishing, span and determinant-shape lemmas") {
  std::mt19937_64 rng(77);
  const std::vector<std::string> tags{"A2", "B2", "G3_1_2", "I2(6)", "A3"};
  int cases = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const auto& g = cached_group(tags[iter % tags.size()]);
    MultFn m = MultFn::constant(g, static_cast<int>(rng() % 2));
    auto cert = certify_dm(g, m, Exec::kSerial);
    REQUIRE(cert.pass);
    const int n = g.rank();
    int d = cert.exponents.back() + static_cast<int>(rng() % 3);
    auto fields = dm_invariant_fields(g, m, d, Exec::kSerial);
    while (fields.empty()) fields = dm_invariant_fields(g, m, ++d, Exec::kSerial);
    // Only the zero invariant field vanishes along a generic covector.
    ScalarVector beta;
    for (int i = 0; i < n; ++i) beta.push_back(random_scalar(g.field(), rng, 5));
    MPoly beta_form = MPoly::linear_form(beta);
    std::vector<MPoly> along;
    for (const auto& L : fields) along.push_back(L.apply(beta_form));
    CHECK(poly_rank(along) == static_cast<int>(fields.size()));
    // A random nonzero field has N independent components and is invariant.
    Derivation L = Derivation::zero(g.field(), n);
    for (const auto& F : fields) L = L + F.scaled(random_scalar(g.field(), rng, 3));
    if (!L.is_zero()) {
      CHECK(poly_rank(L.components) == n);
      CHECK(is_invariant_derivation(g, L));
    }
    // Determinant of N members is divisible by the arrangement; on the certified basis the quotient is constant.
    std::vector<Derivation> picks = cert.basis;
    picks[rng() % n] = L;
    PolyMatrix mat(g.field(), n, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mat(i, j) = picks[i].components[j];
    MPoly det = polymat_det(mat);
    MultiArrangement arr = dm_arrangement(g, m);
    for (int h = 0; h < arr.size(); ++h)
      CHECK(poly_div_linear_power(det, arr.forms[h], arr.multiplicity[h]).divisible());
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("property: Catalan membership of invariant fields matches trigonometric quasi-invariance") {
  std::mt19937_64 rng(4242);
  struct Setup {
    const ReflectionGroup* g;
    MultFn m;
    MultiArrangement cat;
    std::vector<ShiftCondition> conds;
    std::vector<Derivation> good;
  };
  std::vector<Setup> setups;
  for (const std::string tag : {"A2", "B2"}) {
    const auto& g = cached_group(tag);
    MultFn m = tag == "B2" ? MultFn{{2, 1}} : MultFn::constant(g, 1);
    auto space = trig_quasi_space(g, m, 9);
    setups.push_back({&g, m, catalan_arrangement(g, m), trig_conditions(g, m), invariant_fields_from_filtered(g, space)});
  }
  int cases = 0, members = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const auto& s = setups[iter % setups.size()];
    const ReflectionGroup& g = *s.g;
    Derivation L = Derivation::zero(g.field(), g.rank());
    for (const auto& F : s.good)
      if (rng() % 2) L = L + F.scaled(random_scalar(g.field(), rng, 2));
    if (rng() % 3 == 0) {
      MPoly noise = random_poly(g.field(), g.rank(), 5, 2, rng);
      L = L + Derivation(equivariant_tuple(g, noise, 0, Exec::kSerial));
    }
    REQUIRE(is_invariant_derivation(g, L));
    bool comps_ok = std::all_of(L.components.begin(), L.components.end(),
                                [&](const MPoly& p) { return satisfies_shift_conditions(p, s.conds); });
    bool member = derivation_member(L, s.cat).ok;
    CHECK(member == comps_ok);
    members += member;
    // Coning keeps the degree and restricts back.
    if (!L.is_zero()) {
      Derivation c = cone_derivation(L);
      CHECK(c.degree() == L.degree());
      CHECK(c.is_homogeneous());
      CHECK(decone_derivation(c) == L);
    }
    ++cases;
  }
  CHECK(cases >= 200);
  CHECK(members > 20);
  CHECK(members < cases);
}
