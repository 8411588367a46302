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

#include <random>

#include "doctest.h"
#include "qinv/exact/linalg.hpp"
#include "qinv/exact/parse.hpp"
#include "qinv/primitive/primitive.hpp"
#include "test_support.hpp"

using namespace qinv;
using qinv::testing::cached_group;
using qinv::testing::random_scalar;

namespace {

MPoly P(const ReflectionGroup& g, const char* s) { return parse_poly(s, g.field(), g.rank()); }

const BasicInvariants& cached_invariants(const std::string& tag) {
  static std::map<std::string, BasicInvariants> cache;
  auto it = cache.find(tag);
  if (it == cache.end()) it = cache.emplace(tag, basic_invariants(cached_group(tag))).first;
  return it->second;
}

const ReflectionGroup& complex_dihedral(int k) {
  static std::map<int, ReflectionGroup> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, ReflectionGroup::build(GroupSpec::dihedral_complex(k))).first;
  return it->second;
}

/// Dimension of {f in space : f supported on the given monomials}.
int supported_dim(const std::vector<MPoly>& space, const std::vector<Monomial>& support) {
  std::vector<MPoly> outside;
  for (const auto& p : space) {
    MPoly o(p.field(), p.nvars());
    for (const auto& t : p.terms())
      if (std::find(support.begin(), support.end(), t.mono) == support.end())
        o.add_scaled(MPoly::constant(p.field(), p.nvars(), 1L), t.coef, t.mono);
    outside.push_back(o);
  }
  return static_cast<int>(space.size()) - poly_rank(outside);
}

}  // namespace

TEST_CASE("basic invariants: degrees and Jacobian") {
  const auto& g312 = cached_invariants("G3_1_2");
  CHECK(g312.degrees == std::vector<int>{3, 6});
  const auto& g = cached_group("G3_1_2");
  CHECK(g312.ys[0] == P(g, "x1^3 + x2^3"));
  CHECK(g312.ys[1] == P(g, "x1^3*x2^3"));
  CHECK(cached_invariants("B2").degrees == std::vector<int>{2, 4});
  CHECK(cached_invariants("I2(6)").degrees == std::vector<int>{2, 6});
  CHECK(cached_invariants("A3").degrees == std::vector<int>{2, 3, 4});
  CHECK(cached_invariants("B3").degrees == std::vector<int>{2, 4, 6});
  for (const std::string tag : {"G3_1_2", "B2", "I2(6)", "A3", "B3"}) {
    const auto& bi = cached_invariants(tag);
    CHECK(bi.top_unique);
    CHECK_FALSE(bi.jacobian_scalar.is_zero());
    // J = c * prod alpha^{n_H - 1}, checked by expanding the product.
    const auto& gg = cached_group(tag);
    MPoly prod = gg.one();
    for (const auto& h : gg.hyperplanes()) prod = prod * h.alpha.pow(h.order - 1);
    CHECK(bi.jacobian == prod * bi.jacobian_scalar);
  }
}

TEST_CASE("basic invariants: validation of explicit choices") {
  const auto& g = cached_group("B2");
  CHECK_NOTHROW(basic_invariants_from(g, {P(g, "x1^2 + x2^2"), P(g, "x1^4 + x2^4")}));
  CHECK_THROWS_AS(basic_invariants_from(g, {P(g, "x1^2 + x2^2"), P(g, "(x1^2 + x2^2)^2")}), PrimitiveError);
  CHECK_THROWS_AS(basic_invariants_from(g, {P(g, "x1^2 + x2^2"), P(g, "x1^4")}), PrimitiveError);
  CHECK_THROWS_AS(basic_invariants_from(g, {P(g, "x1^4 + x2^4"), P(g, "x1^2 + x2^2")}), PrimitiveError);
  CHECK_THROWS_AS(basic_invariants_from(g, {P(g, "x1^2 + x2^2")}), PrimitiveError);
}

TEST_CASE("primitive derivation refuses a repeated top degree") {
  // A1 x A1 acting on two coordinates: both degrees are 2.
  const CycField* f = CycField::get(2);
  ScalarMatrix s1 = ScalarMatrix::identity(f, 2), s2 = ScalarMatrix::identity(f, 2);
  s1(0, 0) = CycScalar(f, -1L);
  s2(1, 1) = CycScalar(f, -1L);
  GroupSpec spec{Family::kCustom, 2, 0, 0, 2, {s1, s2}, "A1xA1"};
  auto a1a1 = ReflectionGroup::build(spec);
  BasicInvariants bi = basic_invariants(a1a1);
  CHECK(bi.degrees == std::vector<int>{2, 2});
  CHECK_FALSE(bi.top_unique);
  CHECK_THROWS_AS(primitive_apply(bi, P(a1a1, "x1")), PrimitiveError);
}

TEST_CASE("primitive derivation on basic invariants") {
  for (const std::string tag : {"G3_1_2", "B2", "I2(6)", "A2", "A3", "B3"}) {
    CAPTURE(tag);
    const auto& bi = cached_invariants(tag);
    const auto& g = cached_group(tag);
    const int n = g.rank();
    CHECK(primitive_value(bi, bi.ys[n - 1]) == g.one());
    for (int i = 0; i + 1 < n; ++i) CHECK(primitive_value(bi, bi.ys[i]).is_zero());
    // D kills T-coefficients: D(y_1 y_N^2) = 2 y_1 y_N.
    CHECK(primitive_value(bi, bi.ys[0] * bi.ys[n - 1].pow(2)) ==
          bi.ys[0] * bi.ys[n - 1] * CycScalar(g.field(), 2L));
  }
  // A generic polynomial is not mapped to a polynomial.
  const auto& g = cached_group("B2");
  PrimitiveResult r = primitive_apply(cached_invariants("B2"), P(g, "x1"));
  CHECK_FALSE(r.value.has_value());
  CHECK_FALSE(r.remainder.is_zero());
  CHECK_THROWS_AS(primitive_value(cached_invariants("B2"), P(g, "x1")), PrimitiveError);
}

TEST_CASE("primitive derivation lowers quasi-invariance by one") {
  struct Case {
    std::string tag;
    std::vector<int> m;
  };
  for (const auto& c : std::vector<Case>{{"B2", {1, 1}}, {"B2", {2, 1}}, {"G3_1_2", {1, 1}}, {"I2(6)", {1, 1}}}) {
    CAPTURE(c.tag);
    const auto& g = cached_group(c.tag);
    const auto& bi = cached_invariants(c.tag);
    MultFn m{c.m};
    MultFn lower = shifted(m, -1);
    for (int d = 0; d <= 12; ++d)
      for (const auto& p : quasi_space(g, m, d)) {
        PrimitiveResult r = primitive_apply(bi, p);
        REQUIRE(r.value.has_value());
        CHECK(is_quasi_invariant(g, *r.value, lower));
        if (!r.value->is_zero()) CHECK(r.value->degree() == d - bi.top_degree());
      }
  }
}

TEST_CASE("primitive derivation is a graded bijection on the reflection isotypic parts") {
  struct Case {
    std::string tag;
    std::vector<int> m;
  };
  for (const auto& c : std::vector<Case>{{"B2", {1, 1}}, {"B2", {2, 1}}, {"G3_1_2", {1, 1}}, {"I2(6)", {2, 1}}}) {
    CAPTURE(c.tag);
    const auto& g = cached_group(c.tag);
    auto rows = primitive_rank_table(g, cached_invariants(c.tag), MultFn{c.m}, c.tag == "I2(6)" ? 18 : 12);
    int nonzero = 0;
    for (const auto& r : rows) {
      CAPTURE(r.degree);
      CHECK(r.source_dim == r.target_dim);
      CHECK(r.rank == r.source_dim);
      CHECK(r.lands_in_target);
      nonzero += r.source_dim > 0;
    }
    CHECK(nonzero >= 2);
  }
}

TEST_CASE("components of an invariant basis span the reflection isotypic part over invariants") {
  for (const std::string tag : {"B2", "G3_1_2"}) {
    CAPTURE(tag);
    const auto& g = cached_group(tag);
    MultFn m = MultFn::constant(g, 1);
    auto cert = certify_dm(g, m);
    REQUIRE(cert.pass);
    for (int d = 0; d <= 14; ++d) {
      std::vector<MPoly> products;
      for (const auto& L : cert.basis) {
        if (L.degree() > d) continue;
        for (const auto& inv : invariant_space(g, d - L.degree()))
          for (const auto& comp : L.components) products.push_back(inv * comp);
      }
      auto iso = quasi_isotypic(g, m, d, vstar_character(g), g.rank());
      CAPTURE(d);
      CHECK(poly_rank(products) == static_cast<int>(iso.size()));
      for (const auto& p : products) CHECK(in_span(iso, p));
    }
  }
}

TEST_CASE("two choices of basic invariants give proportional primitive derivations") {
  const auto& g = cached_group("B2");
  BasicInvariants a = basic_invariants_from(g, {P(g, "x1^2 + x2^2"), P(g, "x1^2*x2^2")});
  BasicInvariants b = basic_invariants_from(g, {P(g, "x1^2 + x2^2"), P(g, "x1^4 + x2^4")});
  std::vector<MPoly> tests;
  for (int d = 5; d <= 9; d += 2)
    for (const auto& p : quasi_space(g, MultFn::constant(g, 1), d)) tests.push_back(p);
  tests.push_back(P(g, "x1^4*x2^2 + x1^2*x2^4"));
  std::optional<CycScalar> ratio;
  for (const auto& p : tests) {
    MPoly da = primitive_value(a, p), db = primitive_value(b, p);
    if (da.is_zero()) {
      CHECK(db.is_zero());
      continue;
    }
    CycScalar r = db.leading_term().coef / da.leading_term().coef;
    if (!ratio) ratio = r;
    CHECK(db == da * *ratio);
  }
  REQUIRE(ratio.has_value());
  CHECK(*ratio == CycScalar(g.field(), Rational(-1, 2)));
}

TEST_CASE("nabla_D between invariant logarithmic derivation modules") {
  const auto& b2 = cached_group("B2");
  const auto& bi = cached_invariants("B2");
  MultFn one = MultFn::constant(b2, 1), zero = MultFn::constant(b2, 0);
  auto cert = certify_dm(b2, one);
  REQUIRE(cert.pass);
  for (const auto& L : cert.basis) {
    Derivation image = nabla_D(bi, L);
    CHECK(is_invariant_derivation(b2, image));
    CHECK(derivation_member(image, dm_arrangement(b2, zero)).ok);
    CHECK(image.degree() == L.degree() - bi.top_degree());
    NablaInverse back = nabla_D_inverse(b2, bi, zero, image);
    REQUIRE(back.field.has_value());
    CHECK(*back.field == L);
    // T-linearity: y_1 passes through.
    CHECK(nabla_D(bi, L.multiplied(bi.ys[0])) == image.multiplied(bi.ys[0]));
  }
  // A target outside the invariant module is reported, not solved.
  NablaInverse bad = nabla_D_inverse(b2, bi, zero, Derivation({P(b2, "x1"), P(b2, "0")}));
  CHECK_FALSE(bad.field.has_value());
  CHECK(bad.status.find("outside the image") != std::string::npos);

  const auto& g = cached_group("G3_1_2");
  const auto& gbi = cached_invariants("G3_1_2");
  auto d7 = dm_invariant_fields(g, MultFn::constant(g, 1), 7);
  REQUIRE(d7.size() == 1);
  Derivation image = nabla_D(gbi, d7[0]);
  CHECK(image.degree() == 1);
  CHECK(derivation_member(image, dm_arrangement(g, MultFn::constant(g, 0))).ok);
}

TEST_CASE("dihedral quasi-invariants and the eigen-relation") {
  for (int k : {4, 6}) {
    const auto& g = complex_dihedral(k);
    const int ell = k / 2;
    CAPTURE(k);
    // No conditions at m = 0.
    for (int i : dihedral_index_set(ell, 0)) CHECK(dihedral_q(g, 0, 0, i).first == g.var(0).pow(i));
    BasicInvariants bi = dihedral_basic_invariants(g);
    for (auto [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
      const int total = m1 + m2;
      for (int i : dihedral_index_set(ell, total)) {
        CAPTURE(m1);
        CAPTURE(m2);
        CAPTURE(i);
        auto [q, p] = dihedral_q(g, m1, m2, i);
        CHECK(q.coefficient(Monomial::variable(0, total * ell + i)) == CycScalar(g.field(), 1L));
        CHECK(p == q.permute_vars({1, 0}, 2).conj_coefficients());
        CHECK(is_quasi_invariant(g, q, dihedral_mult(g, m1, m2)));
        CHECK(is_quasi_invariant(g, p, dihedral_mult(g, m1, m2)));
        CHECK(vstar_project(g, q) == q);
        auto [q0, p0] = dihedral_q(g, m1 - 1, m2 - 1, i);
        const CycScalar eig(g.field(), static_cast<long>(total * ell + i));
        CHECK(primitive_value(bi, q) == q0 * eig);
        CHECK(primitive_value(bi, p) == p0 * eig);
      }
    }
    CHECK_THROWS_AS(dihedral_q(g, 1, 1, ell), std::invalid_argument);
  }
}

TEST_CASE("dihedral index set follows the parity of |m|") {
  // For the other parity the monomial shape admits no quasi-invariant in the reflection part.
  for (int k : {4, 6, 8}) {
    const auto& g = complex_dihedral(k);
    const int ell = k / 2;
    for (auto [m1, m2] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
      const int total = m1 + m2;
      auto good = dihedral_index_set(ell, total);
      auto bad = dihedral_index_set(ell, total + 1);
      MultFn m = dihedral_mult(g, m1, m2);
      auto dim_for = [&](int i) {
        std::vector<Monomial> support;
        for (int s = 0; s <= total; ++s) {
          const int e[2] = {(total - s) * ell + i, ell * s};
          support.push_back(Monomial::from_exponents(e));
        }
        return supported_dim(quasi_isotypic(g, m, total * ell + i, vstar_character(g), 2), support);
      };
      CAPTURE(k);
      CAPTURE(total);
      for (int i : good) CHECK(dim_for(i) == 1);
      // For l = 2 both parities give {1, 3}.
      if (good != bad)
        for (int i : bad) CHECK(dim_for(i) == 0);
    }
  }
}

TEST_CASE("property: divisibility of coroot derivatives and D on random quasi-invariants") {
  std::mt19937_64 rng(913);
  struct Case {
    std::string tag;
    std::vector<int> m;
  };
  const std::vector<Case> cases{{"G3_1_2", {1, 1}}, {"B2", {2, 1}}, {"B2", {1, 1}}, {"I2(6)", {1, 2}}};
  int count = 0;
  for (int iter = 0; iter < 240; ++iter) {
    const auto& c = cases[iter % cases.size()];
    const auto& g = cached_group(c.tag);
    MultFn m{c.m};
    const int d = 4 + static_cast<int>(rng() % 8);
    auto basis = quasi_space(g, m, d, Exec::kSerial);
    MPoly p = g.zero();
    for (const auto& b : basis) p.add_scaled(b, random_scalar(g.field(), rng, 4));
    for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) {
      const auto& hp = g.hyperplanes()[h];
      if (m.at(g, h) == 0) continue;
      MPoly deriv = p.directional(hp.coroot);
      CHECK(poly_div_linear_power(deriv, hp.alpha, hp.order - 1).divisible());
    }
    MPoly dp = primitive_value(cached_invariants(c.tag), p);
    CHECK(is_quasi_invariant(g, dp, shifted(m, -1)));
    ++count;
  }
  CHECK(count >= 200);
}

TEST_CASE("property: nabla_D round trip on random invariant fields") {
  std::mt19937_64 rng(5151);
  const std::vector<std::string> tags{"B2", "G3_1_2", "A2"};
  int count = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const auto& tag = tags[iter % tags.size()];
    const auto& g = cached_group(tag);
    const auto& bi = cached_invariants(tag);
    MultFn zero = MultFn::constant(g, 0), one = MultFn::constant(g, 1);
    const int d = bi.top_degree() + 1 + static_cast<int>(rng() % 6);
    auto fields = dm_invariant_fields(g, one, d, Exec::kSerial);
    Derivation L = Derivation::zero(g.field(), g.rank());
    for (const auto& F : fields) L = L + F.scaled(random_scalar(g.field(), rng, 3));
    Derivation image = nabla_D(bi, L);
    CHECK(derivation_member(image, dm_arrangement(g, zero)).ok);
    NablaInverse back = nabla_D_inverse(g, bi, zero, image, Exec::kSerial);
    REQUIRE(back.field.has_value());
    CHECK(*back.field == L);
    CHECK(back.image_rank == back.source_dim);
    ++count;
  }
  CHECK(count >= 200);
}
