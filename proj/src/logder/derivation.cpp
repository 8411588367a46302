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

#include "qinv/logder/derivation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qinv/exact/parse.hpp"
#include "qinv/quasi/quasi.hpp"

namespace qinv {

Derivation::Derivation(std::vector<MPoly> comps) : components(std::move(comps)) {
  if (components.empty()) throw std::invalid_argument("derivation needs at least one component");
  for (const auto& c : components)
    if (c.nvars() != nvars() || c.field() != components.front().field())
      throw std::invalid_argument("derivation components disagree on ring");
}

Derivation Derivation::zero(const CycField* field, int nvars) {
  return Derivation(std::vector<MPoly>(nvars, MPoly(field, nvars)));
}

bool Derivation::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const MPoly& p) { return p.is_zero(); });
}

int Derivation::degree() const {
  int d = kDegreeNegInf;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

bool Derivation::is_homogeneous() const {
  const int d = degree();
  for (const auto& c : components)
    if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != d)) return false;
  return true;
}

MPoly Derivation::apply(const MPoly& p) const {
  MPoly out(field(), nvars());
  for (int i = 0; i < nvars(); ++i) {
    MPoly dp = p.partial(i);
    if (!dp.is_zero()) out += components[i] * dp;
  }
  return out;
}

Derivation Derivation::homogeneous_part(int d) const {
  std::vector<MPoly> out;
  for (const auto& c : components) out.push_back(c.homogeneous_part(d));
  return Derivation(std::move(out));
}

Derivation Derivation::top_part() const {
  if (is_zero()) return *this;
  return homogeneous_part(degree());
}

Derivation Derivation::scaled(const CycScalar& c) const {
  Derivation out = *this;
  for (auto& p : out.components) p *= c;
  return out;
}

Derivation Derivation::multiplied(const MPoly& p) const {
  Derivation out = *this;
  for (auto& c : out.components) c = c * p;
  return out;
}

std::string Derivation::to_string(const std::vector<std::string>& names_in) const {
  const auto names = names_in.empty() ? default_var_names(nvars()) : names_in;
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (components[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + components[i].to_string(names) + ")*d" + names[i];
  }
  return out.empty() ? "0" : out;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  Derivation out = a;
  for (int i = 0; i < a.nvars(); ++i) out.components[i] += b.components[i];
  return out;
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  Derivation out = a;
  for (int i = 0; i < a.nvars(); ++i) out.components[i] -= b.components[i];
  return out;
}

Derivation euler_field(const CycField* field, int nvars) {
  std::vector<MPoly> comps;
  for (int i = 0; i < nvars; ++i) comps.push_back(MPoly::variable(field, nvars, i));
  return Derivation(std::move(comps));
}

bool is_invariant_derivation(const ReflectionGroup& g, const Derivation& L) {
  if (L.nvars() != g.rank()) throw std::invalid_argument("derivation and group disagree on rank");
  std::set<int> gens;
  for (const auto& h : g.hyperplanes()) gens.insert(h.generator);
  for (int s : gens) {
    const auto& images = g.action_images(s);
    for (int j = 0; j < g.rank(); ++j)
      if (L.apply(images[j]) != g.act(s, L.components[j])) return false;
  }
  return true;
}

int MultiArrangement::total_multiplicity() const {
  int s = 0;
  for (int r : multiplicity) s += r;
  return s;
}

MPoly MultiArrangement::defining_polynomial() const {
  MPoly out = MPoly::constant(field, nvars, 1L);
  for (int h = 0; h < size(); ++h) out = out * forms[h].pow(multiplicity[h]);
  return out;
}

MPoly normalize_affine_form(const MPoly& form) {
  if (form.degree() != 1) throw std::invalid_argument("hyperplane form must have degree one");
  ScalarVector a = form.linear_coefficients();
  size_t k = 0;
  while (a[k].is_zero()) ++k;
  return form * a[k].inverse();
}

void MultiArrangement::add(const MPoly& form, int mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  if (mult == 0) return;
  if (form.nvars() != nvars || form.field() != field) throw std::invalid_argument("form outside the arrangement ring");
  MPoly f = normalize_affine_form(form);
  for (int h = 0; h < size(); ++h)
    if (forms[h] == f) {
      multiplicity[h] += mult;
      return;
    }
  if (!f.constant_term().is_zero()) central = false;
  forms.push_back(std::move(f));
  multiplicity.push_back(mult);
}

std::string MultiArrangement::canonical_text() const {
  std::ostringstream os;
  os << "nvars=" << nvars << ";";
  for (int h = 0; h < size(); ++h) os << "(" << forms[h].to_string() << ")^" << multiplicity[h] << ";";
  return os.str();
}

MultiArrangement reflection_multiarrangement(const ReflectionGroup& g, const MultFn& m, int extra) {
  MultiArrangement arr{g.field(), g.rank(), {}, {}, true, g.label()};
  for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) {
    const auto& hp = g.hyperplanes()[h];
    arr.add(hp.alpha, m.at(g, h) * hp.order + extra);
  }
  return arr;
}

MultiArrangement catalan_arrangement(const ReflectionGroup& g, const MultFn& m) {
  Family fam = g.spec().family;
  if (fam != Family::kA && fam != Family::kB && fam != Family::kD)
    throw std::invalid_argument("Catalan arrangements need a Weyl group of type A, B or D");
  MultiArrangement arr{g.field(), g.rank(), {}, {}, true, "Cat(" + g.label() + ", m=" + m.to_string() + ")"};
  for (const auto& rd : root_data(g)) {
    MPoly form = MPoly::linear_form(rd.form);
    const int mult = m.at(g, rd.hyperplane);
    for (int j = -mult; j <= mult; ++j) arr.add(form - MPoly::constant(g.field(), g.rank(), static_cast<long>(j)));
  }
  return arr;
}

MultiArrangement bc_catalan(int n, int m1, int m2, int m3) {
  const CycField* f = bc_field();
  MultiArrangement arr{f, n, {}, {}, true,
                       "BCCat(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(m3) + ")"};
  auto c = [&](const Rational& v) { return MPoly::constant(f, n, CycScalar(f, v)); };
  for (int i = 0; i < n; ++i) {
    MPoly x = MPoly::variable(f, n, i);
    arr.add(x);
    for (int j = 1; j <= m1; ++j) {
      arr.add(x - c(Rational(j)));
      arr.add(x + c(Rational(j)));
    }
    for (int j = 1; j <= m2; ++j) {
      arr.add(x - c(Rational(2 * j - 1, 2)));
      arr.add(x + c(Rational(2 * j - 1, 2)));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (long eps : {1L, -1L}) {
        MPoly form = MPoly::variable(f, n, i) - MPoly::variable(f, n, j) * CycScalar(f, eps);
        arr.add(form);
        for (int k = 1; k <= m3; ++k) {
          arr.add(form - c(Rational(k)));
          arr.add(form + c(Rational(k)));
        }
      }
  return arr;
}

MultiArrangement cone(const MultiArrangement& arr) {
  const int n = arr.nvars;
  MultiArrangement out{arr.field, n + 1, {}, {}, true, "c" + arr.label};
  for (int h = 0; h < arr.size(); ++h) {
    ScalarVector coeffs = arr.forms[h].linear_coefficients();
    coeffs.push_back(arr.forms[h].constant_term());
    out.add(MPoly::linear_form(coeffs), arr.multiplicity[h]);
  }
  out.add(MPoly::variable(arr.field, n + 1, n));
  return out;
}

MembershipWitness derivation_member(const Derivation& L, const MultiArrangement& arr) {
  if (L.nvars() != arr.nvars) throw std::invalid_argument("derivation and arrangement disagree on variable count");
  MembershipWitness w;
  for (int h = 0; h < arr.size(); ++h) {
    MPoly image = L.apply(arr.forms[h]);
    DivisionResult r = poly_div_linear_power(image, arr.forms[h], arr.multiplicity[h]);
    if (!r.divisible()) {
      w.ok = false;
      w.hyperplane = h;
      w.exponent = r.max_exponent;
      w.required = arr.multiplicity[h];
      return w;
    }
  }
  return w;
}

namespace {

MPoly homogenize(const MPoly& p, int d, int nvars_out) {
  const int z = nvars_out - 1;
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back({t.mono * Monomial::variable(z, d - t.mono.degree()), t.coef});
  return MPoly::from_terms(p.field(), nvars_out, std::move(terms));
}

}  // namespace

Derivation cone_derivation(const Derivation& L) {
  const int n = L.nvars();
  if (L.is_zero()) return Derivation::zero(L.field(), n + 1);
  const int d = L.degree();
  std::vector<MPoly> comps;
  for (const auto& c : L.components) comps.push_back(homogenize(c, d, n + 1));
  comps.push_back(MPoly(L.field(), n + 1));
  return Derivation(std::move(comps));
}

Derivation decone_derivation(const Derivation& L) {
  const int n = L.nvars() - 1;
  MPoly one = MPoly::constant(L.field(), n + 1, 1L);
  std::vector<MPoly> comps;
  for (int i = 0; i < n; ++i) comps.push_back(L.components[i].substitute_var(n, one).with_nvars(n));
  return Derivation(std::move(comps));
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ArrangementFixture parse_arrangement_fixture(const std::string& text, const CycField* field) {
  ArrangementFixture fx;
  fx.arrangement.field = field;
  fx.arrangement.label = "fixture";
  std::istringstream in(text);
  std::string line;
  int nvars = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    auto fail = [&](const std::string& msg) {
      throw ParseError("fixture line " + std::to_string(lineno) + ": " + msg);
    };
    if (key == "nvars") {
      nvars = std::stoi(rest);
      if (nvars < 1 || nvars >= kMaxVars) fail("bad variable count");
      fx.arrangement.nvars = nvars;
    } else if (key == "label") {
      fx.arrangement.label = rest;
    } else if (key == "hyperplane") {
      if (nvars == 0) fail("nvars must come first");
      int mult = 1;
      if (auto at = rest.find('@'); at != std::string::npos) {
        mult = std::stoi(rest.substr(at + 1));
        rest = trim(rest.substr(0, at));
      }
      fx.arrangement.add(parse_poly(rest, field, nvars), mult);
    } else if (key == "derivation") {
      if (nvars == 0) fail("nvars must come first");
      std::vector<MPoly> comps;
      std::istringstream cs(rest);
      std::string part;
      while (std::getline(cs, part, ',')) comps.push_back(parse_poly(trim(part), field, nvars));
      if (static_cast<int>(comps.size()) != nvars) fail("derivation needs one component per variable");
      fx.derivations.emplace_back(std::move(comps));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (nvars == 0) throw ParseError("fixture without nvars");
  return fx;
}

ArrangementFixture read_arrangement_fixture(const std::string& path, const CycField* field) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement_fixture(ss.str(), field);
}

const std::string& deconing_fixture_text() {
  static const std::string text =
      "# free affine arrangement x1 x2 (x1 + x2 + 1) whose cone is not free\n"
      "label deconing\n"
      "nvars 2\n"
      "hyperplane x1\n"
      "hyperplane x2\n"
      "hyperplane x1 + x2 + 1\n"
      "derivation x1*(x1 + 1), x1*x2\n"
      "derivation x1*x2, x2*(x2 + 1)\n";
  return text;
}

}  // namespace qinv
