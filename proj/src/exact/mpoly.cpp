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

#include "qinv/exact/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace qinv {

namespace {

void append_compositions(int nvars, int var, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(Monomial::from_exponents(cur));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    append_compositions(nvars, var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

bool term_desc(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars < 1) return out;
  std::vector<int> cur(nvars, 0);
  append_compositions(nvars, 0, degree, cur, out);
  return out;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

MPoly::MPoly(const CycField* field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
}

MPoly MPoly::constant(const CycField* field, int nvars, const CycScalar& c) {
  MPoly p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

MPoly MPoly::constant(const CycField* field, int nvars, long c) { return constant(field, nvars, CycScalar(field, c)); }

MPoly MPoly::variable(const CycField* field, int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  MPoly p(field, nvars);
  p.terms_.push_back({Monomial::variable(i), CycScalar(field, 1L)});
  return p;
}

MPoly MPoly::monomial(const CycField* field, int nvars, Monomial m, const CycScalar& c) {
  MPoly p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::linear_form(const ScalarVector& coeffs, const std::optional<CycScalar>& constant) {
  if (coeffs.empty()) throw std::invalid_argument("empty linear form");
  const CycField* field = coeffs.front().field();
  MPoly p(field, static_cast<int>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) p.terms_.push_back({Monomial::variable(static_cast<int>(i)), coeffs[i]});
  if (constant && !constant->is_zero()) p.terms_.push_back({Monomial(), *constant});
  return p;
}

MPoly MPoly::from_terms(const CycField* field, int nvars, std::vector<Term> terms) {
  MPoly p(field, nvars);
  std::sort(terms.begin(), terms.end(), term_desc);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  return p;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (field_ != o.field_) throw ArithmeticError("polynomials over different fields");
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

int MPoly::degree() const { return terms_.empty() ? kDegreeNegInf : terms_.front().mono.degree(); }

int MPoly::min_degree() const { return terms_.empty() ? kDegreeNegInf : terms_.back().mono.degree(); }

bool MPoly::is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

int MPoly::degree_in(int var) const {
  int d = terms_.empty() ? kDegreeNegInf : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

CycScalar MPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial v) { return t.mono > v; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return CycScalar(field_);
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly p(field_, nvars_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) p.terms_.push_back(t);
  return p;
}

MPoly MPoly::top_part() const { return terms_.empty() ? *this : homogeneous_part(degree()); }

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  MPoly p = *this;
  p *= terms_.front().coef.inverse();
  return p;
}

ScalarVector MPoly::linear_coefficients() const {
  if (degree() > 1) throw std::invalid_argument("not of degree <= 1");
  ScalarVector v = zero_vector(field_, nvars_);
  for (const auto& t : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (t.mono.exp(i) == 1) v[i] = t.coef;
  return v;
}

CycScalar MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coef;
  return CycScalar(field_);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  add_scaled(o, CycScalar(o.field_, 1L));
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  add_scaled(o, CycScalar(o.field_, -1L));
  return *this;
}

void MPoly::add_scaled(const MPoly& o, const CycScalar& c, Monomial m) {
  if (o.terms_.empty() || c.is_zero()) {
    if (!field_) *this = MPoly(o.field_, o.nvars_);
    return;
  }
  if (!field_) *this = MPoly(o.field_, o.nvars_);
  check_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  const bool unit = c.is_one();
  auto scaled = [&](const Term& t) {
    Term s{t.mono * m, t.coef};
    if (!unit) s.coef *= c;
    return s;
  };
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Term b = scaled(o.terms_[j]);
    if (i == terms_.size() || b.mono > terms_[i].mono) {
      out.push_back(std::move(b));
      ++j;
    } else if (terms_[i].mono > b.mono) {
      out.push_back(std::move(terms_[i++]));
    } else {
      Term a = std::move(terms_[i++]);
      a.coef += b.coef;
      ++j;
      if (!a.coef.is_zero()) out.push_back(std::move(a));
    }
  }
  terms_ = std::move(out);
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    const MPoly& ref = a.field_ ? a : b;
    return MPoly(ref.field_, ref.nvars_);
  }
  a.check_compatible(b);
  if (b.terms_.size() == 1) {
    MPoly r(a.field_, a.nvars_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.mono * b.terms_[0].mono, t.coef * b.terms_[0].coef});
    return r;
  }
  std::unordered_map<Monomial, CycScalar, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, a.field_);
      it->second.add_mul(s.coef, t.coef);
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(), term_desc);
  MPoly r(a.field_, a.nvars_);
  r.terms_ = std::move(terms);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  MPoly result = constant(field_, nvars_, 1L);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::partial(int var) const {
  MPoly r(field_, nvars_);
  for (const auto& t : terms_) {
    int e = t.mono.exp(var);
    if (e == 0) continue;
    r.terms_.push_back({t.mono / Monomial::variable(var), t.coef * CycScalar(field_, static_cast<long>(e))});
  }
  // Division by x_var preserves relative order among surviving terms.
  return r;
}

MPoly MPoly::directional(const ScalarVector& dir) const {
  if (static_cast<int>(dir.size()) != nvars_) throw std::invalid_argument("direction length mismatch");
  MPoly r(field_, nvars_);
  for (int i = 0; i < nvars_; ++i)
    if (!dir[i].is_zero()) r.add_scaled(partial(i), dir[i]);
  return r;
}

MPoly MPoly::integrate(int var) const {
  MPoly r(field_, nvars_);
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    int e = t.mono.exp(var);
    terms.push_back({t.mono * Monomial::variable(var), t.coef * CycScalar(field_, Rational(1, e + 1))});
  }
  return from_terms(field_, nvars_, std::move(terms));
}

MPoly MPoly::subst_linear(const ScalarMatrix& t_mat, const std::optional<ScalarVector>& shift) const {
  if (t_mat.rows() != nvars_ || t_mat.cols() != nvars_) throw std::invalid_argument("substitution matrix dimension mismatch");
  if (shift && static_cast<int>(shift->size()) != nvars_) throw std::invalid_argument("shift dimension mismatch");
  std::vector<MPoly> images;
  images.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    std::optional<CycScalar> c;
    if (shift) c = (*shift)[i];
    images.push_back(linear_form(t_mat.row(i), c));
  }
  for (auto& im : images) im.nvars_ = nvars_;
  return substitute(images);
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("image count mismatch");
  if (terms_.empty()) return images.empty() ? *this : MPoly(images.front().field(), images.front().nvars());
  PowerCache cache(images);
  cache.prepare(degree());
  return cache.apply(*this);
}

MPoly MPoly::substitute_var(int var, const MPoly& value) const {
  std::vector<MPoly> images;
  for (int i = 0; i < nvars_; ++i) images.push_back(i == var ? value : variable(field_, nvars_, i));
  return substitute(images);
}

CycScalar MPoly::evaluate(const ScalarVector& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
  CycScalar sum(field_);
  for (const auto& t : terms_) {
    CycScalar v = t.coef;
    for (int i = 0; i < nvars_; ++i)
      if (t.mono.exp(i)) v *= point[i].pow(t.mono.exp(i));
    sum += v;
  }
  return sum;
}

MPoly MPoly::with_nvars(int nvars) const {
  for (int i = nvars; i < nvars_; ++i)
    if (degree_in(i) > 0) throw std::invalid_argument("dropping a variable that occurs");
  MPoly r = *this;
  r.nvars_ = nvars;
  return r;
}

MPoly MPoly::permute_vars(const std::vector<int>& perm, int nvars) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < nvars_; ++i)
      if (t.mono.exp(i)) e[perm[i]] += t.mono.exp(i);
    terms.push_back({Monomial::from_exponents(e), t.coef});
  }
  return from_terms(field_, nvars, std::move(terms));
}

MPoly MPoly::conj_coefficients() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = t.coef.conj();
  return r;
}

std::string MPoly::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const std::vector<std::string> names = names_in.empty() ? default_var_names(nvars_) : names_in;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      int e = t.mono.exp(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string coef;
    bool neg = false;
    if (t.coef.is_rational()) {
      Rational v = t.coef.rational();
      neg = v < 0;
      if (neg) v = -v;
      if (v != 1 || mono.empty()) coef = v.get_str();
    } else {
      coef = t.coef.to_string();
      if (coef[0] == '-') {
        neg = true;
        coef = (-t.coef).to_string();
      }
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    os << coef;
    if (!coef.empty() && !mono.empty()) os << "*";
    os << mono;
  }
  return os.str();
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

DivisionResult poly_div_linear_power(const MPoly& p, const MPoly& alpha, int k) {
  if (alpha.degree() != 1) throw std::invalid_argument("divisor must be an affine form of degree one");
  if (k < 0) throw std::invalid_argument("negative exponent");
  const CycField* f = p.field();
  const int n = p.nvars();
  DivisionResult res;
  if (p.is_zero()) {
    res.quotient = p;
    res.max_exponent = k;
    return res;
  }
  if (k == 0) {
    res.quotient = p;
    return res;
  }
  ScalarVector a = alpha.linear_coefficients();
  CycScalar c = alpha.constant_term();
  int pivot = 0;
  while (a[pivot].is_zero()) ++pivot;
  // y_pivot = alpha(x); x_pivot = (y_pivot - c - sum_{i != pivot} a_i y_i) / a_pivot.
  CycScalar inv = a[pivot].inverse();
  std::vector<MPoly> to_y;
  for (int i = 0; i < n; ++i) {
    if (i != pivot) {
      to_y.push_back(MPoly::variable(f, n, i));
      continue;
    }
    ScalarVector coeffs = zero_vector(f, n);
    for (int j = 0; j < n; ++j) coeffs[j] = (j == pivot) ? inv : -(a[j] * inv);
    to_y.push_back(MPoly::linear_form(coeffs, -(c * inv)));
  }
  MPoly py = p.substitute(to_y);
  int low = 255;
  for (const auto& t : py.terms()) low = std::min(low, t.mono.exp(pivot));
  if (low < k) {
    res.max_exponent = low;
    return res;
  }
  std::vector<Term> qterms;
  qterms.reserve(py.size());
  for (const auto& t : py.terms()) qterms.push_back({t.mono / Monomial::variable(pivot, k), t.coef});
  MPoly qy = MPoly::from_terms(f, n, std::move(qterms));
  std::vector<MPoly> to_x;
  for (int i = 0; i < n; ++i) to_x.push_back(i == pivot ? alpha : MPoly::variable(f, n, i));
  res.quotient = qy.substitute(to_x);
  res.max_exponent = k;
  return res;
}

int linear_multiplicity(const MPoly& p, const MPoly& alpha) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial");
  DivisionResult r = poly_div_linear_power(p, alpha, p.degree() + 1);
  return r.max_exponent;
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw ArithmeticError("division by zero polynomial");
  MPoly rem = p;
  MPoly quot(p.field(), p.nvars());
  const Term& lead = q.leading_term();
  CycScalar lead_inv = lead.coef.inverse();
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!t.mono.divisible_by(lead.mono)) return std::nullopt;
    Monomial m = t.mono / lead.mono;
    CycScalar c = t.coef * lead_inv;
    quot.add_scaled(MPoly::constant(p.field(), p.nvars(), 1L), c, m);
    rem.add_scaled(q, -c, m);
  }
  return quot;
}

MPoly poly_subst_linear(const MPoly& p, const ScalarMatrix& t_mat, const std::optional<ScalarVector>& shift) {
  return p.subst_linear(t_mat, shift);
}

MPoly poly_partial(const MPoly& p, const ScalarVector& direction) { return p.directional(direction); }

PowerCache::PowerCache(std::vector<MPoly> images) : images_(std::move(images)), powers_(images_.size()) {}

void PowerCache::prepare(int max_degree) {
  if (max_degree <= prepared_) return;
  for (size_t v = 0; v < images_.size(); ++v) {
    auto& pw = powers_[v];
    if (pw.empty()) pw.push_back(MPoly::constant(images_[v].field(), images_[v].nvars(), 1L));
    while (static_cast<int>(pw.size()) <= max_degree) pw.push_back(pw.back() * images_[v]);
  }
  prepared_ = max_degree;
}

MPoly PowerCache::apply(Monomial m) const {
  if (m.degree() > prepared_) throw std::logic_error("power cache not prepared to this degree");
  MPoly r = powers_.empty() ? MPoly() : powers_[0][0];
  bool first = true;
  for (size_t v = 0; v < images_.size(); ++v) {
    int e = m.exp(static_cast<int>(v));
    if (e == 0) continue;
    if (first) {
      r = powers_[v][e];
      first = false;
    } else {
      r *= powers_[v][e];
    }
  }
  return r;
}

MPoly PowerCache::apply(const MPoly& p) const {
  const MPoly& proto = images_.front();
  MPoly r(proto.field(), proto.nvars());
  for (const auto& t : p.terms()) r.add_scaled(apply(t.mono), t.coef);
  return r;
}

}  // namespace qinv
