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
#include "qinv/exact/mpoly.hpp"
#include "qinv/exact/parse.hpp"
#include "qinv/exact/polymatrix.hpp"
#include "test_support.hpp"

using namespace qinv;
using qinv::testing::random_poly;
using qinv::testing::random_scalar;

namespace {

MPoly P(const char* s, const CycField* f, int n = 2) { return parse_poly(s, f, n); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  auto phi12 = cyclotomic_polynomial(12);
  std::vector<mpz_class> expect = {1, 0, -1, 0, 1};
  CHECK(phi12 == expect);
  CHECK(CycField::get(12)->degree() == 4);
  CHECK(CycField::get(1)->degree() == 1);
  CHECK(CycField::get(7)->degree() == 6);
}

TEST_CASE("scalar arithmetic examples") {
  const CycField* f4 = CycField::get(4);
  CycScalar z4 = CycScalar::root(f4, 1);
  CHECK(z4 * z4 == CycScalar(f4, -1L));

  const CycField* f3 = CycField::get(3);
  CycScalar z3 = CycScalar::root(f3, 1);
  CHECK((CycScalar(f3, 1L) + z3) + z3 * z3 == CycScalar(f3));

  // Oracle: long division of x^4 + x^8 by x^4 - x^2 + 1 over the integers.
  std::vector<long> num(9, 0);
  num[4] = 1;
  num[8] = 1;
  const std::vector<long> phi = {1, 0, -1, 0, 1};
  for (int i = 8; i >= 4; --i) {
    long c = num[i];
    if (c == 0) continue;
    for (int j = 0; j <= 4; ++j) num[i - 4 + j] -= c * phi[j];
  }
  const CycField* f12 = CycField::get(12);
  Coords rem(4);
  for (int i = 0; i < 4; ++i) rem[i] = num[i];
  CycScalar oracle(f12, rem);
  CycScalar z12 = CycScalar::root(f12, 1);
  CycScalar got = z12.pow(4) + z12.pow(-4);
  CHECK(got == oracle);
  CHECK(got == CycScalar(f12, -1L));
}

TEST_CASE("scalar errors") {
  const CycField* f3 = CycField::get(3);
  const CycField* f4 = CycField::get(4);
  CHECK_THROWS_AS(CycScalar(f3, 1L) + CycScalar(f4, 1L), ArithmeticError);
  CHECK_THROWS_AS(CycScalar(f3, 1L) / CycScalar(f3), ArithmeticError);
}

TEST_CASE("scalar text form") {
  const CycField* f3 = CycField::get(3);
  CycScalar z = CycScalar::root(f3, 1);
  CHECK(CycScalar(f3, Rational(3, 4)).to_string() == "3/4");
  CycScalar v = (CycScalar(f3, 1L) + z * CycScalar(f3, 2L)) / CycScalar(f3, 3L);
  CHECK(v.to_string() == "(1 + 2*z)/3");
  CHECK(parse_scalar(v.to_string(), f3) == v);
  CHECK(z.conj() == z * z);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20260101);
  const int conductors[] = {1, 3, 4, 5, 6, 8, 12};
  for (int iter = 0; iter < 200; ++iter) {
    const CycField* f = CycField::get(conductors[iter % 7]);
    CycScalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK((a.conj()).conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("linear substitution examples") {
  const CycField* q = CycField::get(1);
  ScalarMatrix swap(q, 2, 2);
  swap(0, 1) = CycScalar(q, 1L);
  swap(1, 0) = CycScalar(q, 1L);
  CHECK(poly_subst_linear(P("x1*x2", q), swap) == P("x1*x2", q));

  ScalarVector t = {CycScalar(q, 1L), CycScalar(q)};
  CHECK(poly_subst_linear(P("x1^2", q), ScalarMatrix::identity(q, 2), t) == P("x1^2 + 2*x1 + 1", q));

  const CycField* f3 = CycField::get(3);
  ScalarMatrix s = ScalarMatrix::identity(f3, 2);
  s(0, 0) = CycScalar::root(f3, 1);
  CHECK(poly_subst_linear(P("x1^3", f3), s) == P("x1^3", f3));
  CHECK(poly_subst_linear(P("x1^2", f3), s) == P("z^2*x1^2", f3));
}

TEST_CASE("substitution by T then T^-1 is the identity") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int iter = 0; checked < 200 && iter < 1000; ++iter) {
    const CycField* f = CycField::get(iter % 2 ? 3 : 1);
    const int n = 2 + iter % 2;
    ScalarMatrix t(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = random_scalar(f, rng, 3);
    if (t.det().is_zero()) continue;
    MPoly p = random_poly(f, n, 4, 5, rng);
    CHECK(poly_subst_linear(poly_subst_linear(p, t), t.inverse()) == p);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("division by powers of linear forms") {
  const CycField* q = CycField::get(1);
  MPoly p = P("x1^2 - x2^2", q);
  MPoly a = P("x1 - x2", q);
  auto r1 = poly_div_linear_power(p, a, 1);
  REQUIRE(r1.divisible());
  CHECK(*r1.quotient == P("x1 + x2", q));
  auto r2 = poly_div_linear_power(p, a, 2);
  CHECK_FALSE(r2.divisible());
  CHECK(r2.max_exponent == 1);
  CHECK_THROWS(poly_div_linear_power(p, MPoly(q, 2), 1));

  const CycField* f3 = CycField::get(3);
  ScalarMatrix s = ScalarMatrix::identity(f3, 2);
  s(0, 0) = CycScalar::root(f3, 1);
  MPoly g = P("x1^7 - 7*x1^4*x2^3", f3);
  MPoly diff = g - poly_subst_linear(g, s);
  CHECK(poly_div_linear_power(diff, P("x1", f3), 3).divisible());
  CHECK(linear_multiplicity(diff, P("x1", f3)) == 4);

  // affine forms
  MPoly shifted = P("(x1 + 1)^3*(x2 - x1)", q);
  CHECK(linear_multiplicity(shifted, P("x1 + 1", q)) == 3);
}

TEST_CASE("division round trip on random inputs") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const CycField* f = CycField::get(iter % 3 == 0 ? 4 : 1);
    const int n = 2 + iter % 2;
    MPoly alpha;
    do {
      ScalarVector c(n, CycScalar(f));
      for (auto& v : c) v = random_scalar(f, rng, 2);
      alpha = MPoly::linear_form(c, iter % 4 == 0 ? std::optional(random_scalar(f, rng, 2)) : std::nullopt);
    } while (alpha.degree() != 1);
    MPoly qpoly = random_poly(f, n, 3, 4, rng);
    if (qpoly.is_zero()) qpoly = MPoly::constant(f, n, 1L);
    int k = iter % 7;
    auto r = poly_div_linear_power(alpha.pow(k) * qpoly, alpha, k);
    REQUIRE(r.divisible());
    CHECK(*r.quotient == qpoly);
    auto exact = divide_exact(alpha.pow(k) * qpoly, qpoly);
    REQUIRE(exact);
    CHECK(*exact == alpha.pow(k));
  }
}

TEST_CASE("directional derivatives") {
  const CycField* q = CycField::get(1);
  CHECK(poly_partial(P("x1^3", q), unit_vector(q, 2, 0)) == P("3*x1^2", q));
  CHECK(poly_partial(P("x1*x2", q), {CycScalar(q, 1L), CycScalar(q, -1L)}) == P("x2 - x1", q));
  const CycField* f3 = CycField::get(3);
  MPoly g = P("x1^7 - 7*x1^4*x2^3", f3);
  MPoly d = poly_partial(g, unit_vector(f3, 2, 1));
  CHECK(d == P("-21*x1^4*x2^2", f3));
  CHECK(poly_div_linear_power(d, P("x2", f3), 2).divisible());
}

TEST_CASE("partial derivatives commute") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const CycField* f = CycField::get(iter % 2 ? 6 : 1);
    MPoly p = random_poly(f, 3, 5, 6, rng);
    ScalarVector u(3, CycScalar(f)), v(3, CycScalar(f));
    for (int i = 0; i < 3; ++i) {
      u[i] = random_scalar(f, rng, 3);
      v[i] = random_scalar(f, rng, 3);
    }
    CHECK(poly_partial(poly_partial(p, u), v) == poly_partial(poly_partial(p, v), u));
  }
}

TEST_CASE("polynomial determinants") {
  const CycField* q = CycField::get(1);
  PolyMatrix id(q, 2, 3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = MPoly::constant(q, 2, 1L);
  CHECK(polymat_det(id) == MPoly::constant(q, 2, 1L));
  PolyMatrix m = PolyMatrix::from_rows({{P("x1", q), P("x2", q)}, {P("x2", q), P("x1", q)}});
  CHECK(polymat_det(m) == P("x1^2 - x2^2", q));
  CHECK_THROWS(polymat_det(PolyMatrix(q, 2, 2, 3)));

  const CycField* f3 = CycField::get(3);
  PolyMatrix dt = PolyMatrix::from_rows({{P("x1^3*(x1^3 - 4*x2^3)", f3), P("-3*x1^2*x2^4", f3)},
                                         {P("3*x1^4*x2^2", f3), P("x2^3*(4*x1^3 - x2^3)", f3)}});
  MPoly det = polymat_det(dt);
  MPoly target = P("(x1*x2)^3*(x1^3 - x2^3)^2", f3);
  CHECK(det.degree() == 12);
  auto ratio = divide_exact(det, target);
  REQUIRE(ratio);
  CHECK(*ratio == MPoly::constant(f3, 2, 4L));
  CHECK_FALSE(ratio->is_zero());
}

TEST_CASE("determinant paths agree on random matrices") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const CycField* f = CycField::get(iter % 2 ? 3 : 1);
    const int n = iter % 5 == 0 ? 5 : 3;
    PolyMatrix m(f, 2, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = random_poly(f, 2, 2, 3, rng);
    MPoly a = det_cofactor(m);
    CHECK(a == det_bareiss(m));
    CHECK(a == polymat_det(m));
  }
}

TEST_CASE("canonical text round trip") {
  const CycField* q = CycField::get(1);
  CHECK(P("3*x1^7 - 7*x1^5*x2^2", q).to_string() == "3*x1^7 - 7*x1^5*x2^2");
  CHECK(P("x2 + x1", q).to_string() == "x1 + x2");
  CHECK(P("-1/4*x1 + 1", q).to_string() == "-1/4*x1 + 1");
  CHECK(MPoly(q, 2).to_string() == "0");
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const CycField* f = CycField::get(iter % 3 ? 12 : 5);
    MPoly p = random_poly(f, 3, 4, 5, rng);
    CHECK(parse_poly(p.to_string(), f, 3) == p);
  }
  CHECK_THROWS_AS(parse_poly("x1 / x2", q, 2), ParseError);
  CHECK_THROWS_AS(parse_poly("x9", q, 2), ParseError);
}

TEST_CASE("nullspace and span helpers") {
  const CycField* q = CycField::get(1);
  // x + y + z = 0, y - z = 0
  std::vector<SparseRow> rows = {
      {{0, CycScalar(q, 1L)}, {1, CycScalar(q, 1L)}, {2, CycScalar(q, 1L)}},
      {{1, CycScalar(q, 1L)}, {2, CycScalar(q, -1L)}},
  };
  auto ns = nullspace(q, 3, rows);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == CycScalar(q, -2L));
  CHECK(ns[0][1] == CycScalar(q, 1L));
  CHECK(ns[0][2] == CycScalar(q, 1L));

  std::vector<MPoly> fam = {P("x1 + x2", q), P("x1 - x2", q), P("2*x1", q)};
  CHECK(poly_rank(fam) == 2);
  CHECK(in_span(fam, P("x2", q)));
  CHECK_FALSE(in_span(fam, P("x1*x2", q)));

  MonomialIndexer idx;
  std::vector<SparseRow> gens = {poly_to_row(fam[0], idx), poly_to_row(fam[1], idx)};
  auto c = solve_combination(q, gens, poly_to_row(P("3*x1 + x2", q), idx));
  REQUIRE(c);
  CHECK((*c)[0] == CycScalar(q, 2L));
  CHECK((*c)[1] == CycScalar(q, 1L));
  CHECK_FALSE(solve_combination(q, gens, poly_to_row(P("x1^2", q), idx)));
}
