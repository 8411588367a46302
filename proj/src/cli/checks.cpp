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

#include "qinv/cli/checks.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "qinv/logder/transport.hpp"
#include "qinv/quasi/quasi.hpp"

namespace qinv {

namespace {

CycScalar random_scalar(const CycField* f, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> coord(-range, range);
  std::uniform_int_distribution<int> den(1, 2);
  Coords c(f->degree());
  for (auto& v : c) v = Rational(coord(rng), den(rng));
  return CycScalar(f, std::move(c));
}

MPoly random_poly(const CycField* f, int nvars, int max_degree, int max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree), count(1, max_terms), var(0, nvars - 1);
  std::vector<Term> terms;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(nvars, 0);
    for (int k = deg(rng); k > 0; --k) ++e[var(rng)];
    terms.push_back({Monomial::from_exponents(e), random_scalar(f, rng, 3)});
  }
  return MPoly::from_terms(f, nvars, std::move(terms));
}

MPoly random_member(const std::vector<MPoly>& basis, const CycField* f, int nvars, std::mt19937_64& rng) {
  MPoly acc(f, nvars);
  for (const auto& b : basis) acc.add_scaled(b, random_scalar(f, rng, 3));
  return acc;
}

const ReflectionGroup& group_for(const std::string& tag) {
  static std::map<std::string, ReflectionGroup> groups;
  auto it = groups.find(tag);
  if (it == groups.end()) it = groups.emplace(tag, ReflectionGroup::build(parse_group_tag(tag))).first;
  return it->second;
}

int floor_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return static_cast<int>(q.get_si());
}

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) {
    if (r.failures == 0) r.first_failure = "case " + std::to_string(r.cases) + ": " + what;
    ++r.failures;
  }
}

}  // namespace

SuiteResult suite_ring_closure(uint64_t seed, int cases) {
  SuiteResult r;
  r.name = "ring_closure";
  std::mt19937_64 rng(seed);
  struct Setup {
    const char* tag;
    std::vector<int> mult;
  };
  const std::vector<Setup> setups{{"B2", {1, 1}}, {"G3_1_2", {1, 1}}, {"I2(6)", {1, 2}}, {"A2", {1}}};
  std::map<std::pair<int, int>, std::vector<MPoly>> spaces;
  auto space = [&](int s, int d) -> const std::vector<MPoly>& {
    auto key = std::make_pair(s, d);
    auto it = spaces.find(key);
    if (it == spaces.end()) {
      const auto& g = group_for(setups[s].tag);
      it = spaces.emplace(key, quasi_space(g, MultFn{setups[s].mult}, d, Exec::kSerial)).first;
    }
    return it->second;
  };
  std::uniform_int_distribution<int> deg(0, 7);
  for (int c = 0; r.cases < cases && c < 50 * cases; ++c) {
    const int s = c % static_cast<int>(setups.size());
    const auto& g = group_for(setups[s].tag);
    MultFn m{setups[s].mult};
    const auto& b1 = space(s, deg(rng));
    const auto& b2 = space(s, deg(rng));
    if (b1.empty() || b2.empty()) continue;
    MPoly p = random_member(b1, g.field(), g.rank(), rng), q = random_member(b2, g.field(), g.rank(), rng);
    bool ok = is_quasi_invariant(g, p * q, m);
    auto inv = invariant_space(g, deg(rng), Exec::kSerial);
    if (!inv.empty()) ok = ok && is_quasi_invariant(g, random_member(inv, g.field(), g.rank(), rng) * p, m);
    record(r, ok, g.label() + " product " + (p * q).to_string());
  }
  return r;
}

SuiteResult suite_idempotent_equivalence(uint64_t seed, int cases) {
  SuiteResult r;
  r.name = "idempotent_equivalence";
  std::mt19937_64 rng(seed);
  const auto& g = group_for("G3_1_2");
  MultFn m = MultFn::constant(g, 1);
  std::vector<std::vector<MPoly>> spaces;
  for (int d = 0; d <= 8; ++d) spaces.push_back(quasi_space(g, m, d, Exec::kSerial));
  std::uniform_int_distribution<int> deg(0, 8);
  for (int c = 0; c < cases; ++c) {
    const int d = deg(rng);
    MPoly p = spaces[d].empty() ? random_poly(g.field(), 2, 8, 4, rng) : random_member(spaces[d], g.field(), 2, rng);
    if (c % 3 == 0) p += random_poly(g.field(), 2, 8, 2, rng);
    bool ok = true;
    for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) {
      const Hyperplane& hp = g.hyperplanes()[h];
      const int req = m.at(g, h) * hp.order;
      MPoly diff = p - g.act(hp.generator, p);
      const bool direct = poly_div_linear_power(diff, hp.alpha, req).divisible();
      bool via = true;
      for (int i = 1; i < hp.order; ++i)
        via = via && poly_div_linear_power(idempotent_apply(g, h, i, p), hp.alpha, req).divisible();
      ok = ok && direct == via;
      if (direct) ok = ok && poly_div_linear_power(diff, hp.alpha, req + 1).divisible();
    }
    record(r, ok, "p = " + p.to_string());
  }
  return r;
}

SuiteResult suite_delta_chain(uint64_t seed, int cases) {
  SuiteResult r;
  r.name = "delta_chain";
  std::mt19937_64 rng(seed);
  const CycField* f = bc_field();
  std::vector<GradedSubspace> spaces;
  std::vector<std::pair<int, int>> params;
  for (auto [m1, m2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{0, 2}, std::pair{1, 0}}) {
    spaces.push_back(bc_trig_quasi_space(2, m1, m2, 0, 7, Exec::kSerial));
    params.push_back(bc_chain_params(m1, m2));
  }
  const ScalarVector half_e1 = {CycScalar(f, Rational(1, 2)), CycScalar(f, 0L)};
  for (int c = 0; c < cases; ++c) {
    const size_t k = c % spaces.size();
    auto [l, rr] = params[k];
    const bool member = c % 2 == 0;
    MPoly p = member ? random_member(spaces[k].basis(7), f, 2, rng) : random_poly(f, 2, 6, 5, rng);
    const bool chain = delta_chain_check(p, half_e1, l, rr).ok;
    const bool direct = direct_chain_check(p, half_e1, l, rr);
    record(r, chain == direct && (!member || chain), "p = " + p.to_string());
  }
  return r;
}

SuiteResult suite_transport_round_trip(uint64_t seed, int cases) {
  SuiteResult r;
  r.name = "transport_round_trip";
  std::mt19937_64 rng(seed);
  const std::vector<std::string> tags{"A2", "B2", "G3_1_2", "I2(6)"};
  std::map<std::pair<std::string, int>, std::vector<VectorElement>> homs, vecs;
  std::uniform_int_distribution<int> deg(0, 5);
  for (int c = 0; c < cases; ++c) {
    const auto& tag = tags[c % tags.size()];
    const auto& g = group_for(tag);
    MultFn m = MultFn::constant(g, 1);
    const int cv = floor_int(cv_degree(g, m));
    const int d = cv + deg(rng);
    auto key = std::make_pair(tag, d);
    if (!homs.count(key)) {
      homs[key] = hom_space(g, m, d, Exec::kSerial);
      vecs[key] = vector_quasi_space(g, m, d, Exec::kSerial);
    }
    bool ok = true;
    VectorElement phi(g.rank(), g.zero());
    for (const auto& b : homs[key]) {
      const CycScalar coef = random_scalar(g.field(), rng, 3);
      for (int j = 0; j < g.rank(); ++j) phi[j].add_scaled(b[j], coef);
    }
    ok = ok && theta_inverse(theta_from_hom(g, m, phi)) == phi;
    VectorElement psi(g.rank(), g.zero());
    for (const auto& b : vecs[key]) {
      const CycScalar coef = random_scalar(g.field(), rng, 3);
      for (int j = 0; j < g.rank(); ++j) psi[j].add_scaled(b[j], coef);
    }
    ok = ok && rho_from_vector_quasi(g, m, psi).components == psi;
    record(r, ok, tag + " degree " + std::to_string(d));
  }
  return r;
}

SuiteResult suite_deconing(uint64_t seed, int cases) {
  SuiteResult r;
  r.name = "deconing_counterexample";
  std::mt19937_64 rng(seed);
  const CycField* f = bc_field();
  ArrangementFixture fx = parse_arrangement_fixture(deconing_fixture_text(), f);
  for (int c = 0; c < cases; ++c) {
    // A random invertible change of basis keeps both verdicts.
    CycScalar a = random_scalar(f, rng, 4), b = random_scalar(f, rng, 4), cc = random_scalar(f, rng, 4),
              d = random_scalar(f, rng, 4);
    if ((a * d - b * cc).is_zero()) {
      a = CycScalar(f, 1L);
      d = CycScalar(f, 1L);
      b = CycScalar(f, 0L);
      cc = CycScalar(f, 0L);
    }
    const auto& t = fx.derivations;
    std::vector<Derivation> fields{t[0].scaled(a) + t[1].scaled(b), t[0].scaled(cc) + t[1].scaled(d)};
    const bool affine = affine_free_check(fx.arrangement, fields).pass;
    const bool coned = coned_free_check(fx.arrangement, fields).pass;
    record(r, affine && !coned, "basis change gave affine " + std::to_string(affine) + " coned " + std::to_string(coned));
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"ring_closure", "idempotent_equivalence", "delta_chain", "transport_round_trip", "deconing_counterexample"};
}

SuiteResult run_suite(const std::string& name, uint64_t seed, int cases) {
  if (name == "ring_closure") return suite_ring_closure(seed, cases);
  if (name == "idempotent_equivalence") return suite_idempotent_equivalence(seed, cases);
  if (name == "delta_chain") return suite_delta_chain(seed, cases);
  if (name == "transport_round_trip") return suite_transport_round_trip(seed, cases);
  if (name == "deconing_counterexample") return suite_deconing(seed, cases);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace qinv
