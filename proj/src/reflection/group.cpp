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

#include "qinv/reflection/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>

#include "qinv/exact/parse.hpp"
#include "qinv/exact/polymatrix.hpp"

namespace qinv {

struct ReflectionGroup::ActionCache {
  std::shared_mutex mutex;
  std::vector<PowerCache> caches;
};

namespace {

ScalarMatrix permutation_swap(const CycField* f, int n, int i, int j) {
  ScalarMatrix m = ScalarMatrix::identity(f, n);
  m(i, i) = CycScalar(f);
  m(j, j) = CycScalar(f);
  m(i, j) = CycScalar(f, 1L);
  m(j, i) = CycScalar(f, 1L);
  return m;
}

bool all_rational(const std::vector<ScalarMatrix>& ms) {
  for (const auto& m : ms)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_rational()) return false;
  return true;
}

ScalarMatrix to_field(const ScalarMatrix& m, const CycField* f) {
  ScalarMatrix out(f, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = CycScalar(f, m(i, j).rational());
  return out;
}

std::vector<ScalarMatrix> dihedral_real_generators(int k, const CycField* f) {
  // Reflections with normals at angles 0 and pi/k.
  CycScalar zk = CycScalar::root(f, f->conductor() / k);
  CycScalar zk_inv = zk.inverse();
  CycScalar i4 = CycScalar::root(f, f->conductor() / 4);
  CycScalar half(f, Rational(1, 2));
  CycScalar cos2 = (zk + zk_inv) * half;
  CycScalar sin2 = (zk - zk_inv) * half / i4;
  ScalarMatrix s0 = ScalarMatrix::identity(f, 2);
  s0(0, 0) = CycScalar(f, -1L);
  ScalarMatrix s1(f, 2, 2);
  s1(0, 0) = -cos2;
  s1(0, 1) = -sin2;
  s1(1, 0) = -sin2;
  s1(1, 1) = cos2;
  return {s0, s1};
}

int gcd_lcm(int a, int b) { return std::lcm(a, b); }

}  // namespace

ScalarVector normalize_covector(const ScalarVector& v) {
  size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  if (k == v.size()) throw ArithmeticError("zero covector");
  CycScalar inv = v[k].inverse();
  ScalarVector out = v;
  for (auto& x : out) x *= inv;
  return out;
}

ReflectionGroup ReflectionGroup::build(const GroupSpec& spec, int order_cap) {
  ReflectionGroup g;
  g.spec_ = spec;
  g.rank_ = spec.rank;
  std::vector<ScalarMatrix> gens;
  const int n = spec.rank;
  switch (spec.family) {
    case Family::kA: {
      if (n < 1 || n > kMaxVars) throw GroupError("unsupported rank for type A");
      g.field_ = CycField::get(2);
      const CycField* f = g.field_;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(permutation_swap(f, n, i, i + 1));
      // transposition (N, N+1): u_N -> -u_N, u_j -> u_j - u_N
      ScalarMatrix t = ScalarMatrix::identity(f, n);
      for (int j = 0; j < n - 1; ++j) t(j, n - 1) = CycScalar(f, -1L);
      t(n - 1, n - 1) = CycScalar(f, -1L);
      gens.push_back(t);
      // Gram matrix of the ambient product restricted to sum-zero vectors in u-coordinates.
      ScalarMatrix e(f, n + 1, n);
      Rational shift(-1, n + 1);
      for (int r = 0; r <= n; ++r)
        for (int c = 0; c < n; ++c) e(r, c) = CycScalar(f, shift + (r == c ? Rational(1) : Rational(0)));
      g.gram_ = e.transpose() * e;
      break;
    }
    case Family::kSymmetricAmbient:
      if (n < 2 || n > kMaxVars) throw GroupError("unsupported size for the ambient symmetric group");
      g.field_ = CycField::get(2);
      for (int i = 0; i + 1 < n; ++i) gens.push_back(permutation_swap(g.field_, n, i, i + 1));
      break;
    case Family::kB:
    case Family::kD: {
      if (n < 2 || n > kMaxVars) throw GroupError("unsupported rank for type B/D");
      g.field_ = CycField::get(2);
      const CycField* f = g.field_;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(permutation_swap(f, n, i, i + 1));
      if (spec.family == Family::kB) {
        ScalarMatrix s = ScalarMatrix::identity(f, n);
        s(n - 1, n - 1) = CycScalar(f, -1L);
        gens.push_back(s);
      } else {
        ScalarMatrix s = permutation_swap(f, n, n - 2, n - 1);
        s(n - 2, n - 1) = CycScalar(f, -1L);
        s(n - 1, n - 2) = CycScalar(f, -1L);
        gens.push_back(s);
      }
      break;
    }
    case Family::kDihedral: {
      if (spec.k < 2) throw GroupError("dihedral order parameter must be at least 2");
      const CycField* big = CycField::get(gcd_lcm(spec.k, 4));
      gens = dihedral_real_generators(spec.k, big);
      if (all_rational(gens)) {
        g.field_ = CycField::get(2);
        for (auto& m : gens) m = to_field(m, g.field_);
      } else {
        g.field_ = big;
      }
      break;
    }
    case Family::kDihedralComplex: {
      if (spec.k < 2) throw GroupError("dihedral order parameter must be at least 2");
      g.field_ = CycField::get(gcd_lcm(spec.k, 2));
      const CycField* f = g.field_;
      gens.push_back(permutation_swap(f, 2, 0, 1));
      ScalarMatrix s(f, 2, 2);
      s(0, 1) = CycScalar::root(f, f->conductor() / spec.k);
      s(1, 0) = s(0, 1).inverse();
      gens.push_back(s);
      break;
    }
    case Family::kComplexMonomial: {
      if (spec.r < 1 || n < 1 || n > kMaxVars) throw GroupError("unsupported G(r,1,N) parameters");
      g.field_ = CycField::get(gcd_lcm(spec.r, 2));
      const CycField* f = g.field_;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(permutation_swap(f, n, i, i + 1));
      if (spec.r > 1) {
        ScalarMatrix d = ScalarMatrix::identity(f, n);
        d(0, 0) = CycScalar::root(f, f->conductor() / spec.r);
        gens.push_back(d);
      }
      break;
    }
    case Family::kCustom:
      if (spec.generators.empty()) throw GroupError("custom group without generators");
      g.field_ = spec.generators.front().field();
      gens = spec.generators;
      for (const auto& m : gens)
        if (m.rows() != n || m.cols() != n || m.field() != g.field_) throw GroupError("generator shape or field mismatch");
      break;
  }
  if (g.gram_.rows() == 0) g.gram_ = ScalarMatrix::identity(g.field_, n);
  g.enumerate(gens, order_cap);
  g.find_hyperplanes(gens);
  return g;
}

void ReflectionGroup::enumerate(const std::vector<ScalarMatrix>& generators, int order_cap) {
  ScalarMatrix id = ScalarMatrix::identity(field_, rank_);
  elements_.push_back(id);
  index_.emplace(id.key(), 0);
  for (size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& s : generators) {
      ScalarMatrix next = elements_[head] * s;
      std::string key = next.key();
      if (index_.count(key)) continue;
      if (static_cast<int>(elements_.size()) >= order_cap)
        throw GroupError("group order exceeds cap of " + std::to_string(order_cap));
      index_.emplace(std::move(key), static_cast<int>(elements_.size()));
      elements_.push_back(std::move(next));
    }
  }
  const int order = static_cast<int>(elements_.size());
  inverse_.resize(order);
  det_.resize(order);
  trace_.resize(order);
  images_.resize(order);
  charpoly_.resize(order);
  for (int i = 0; i < order; ++i) {
    ScalarMatrix inv = elements_[i].inverse();
    inverse_[i] = index_of(inv);
    det_[i] = elements_[i].det();
    trace_[i] = elements_[i].trace();
    for (int r = 0; r < rank_; ++r) {
      MPoly img = MPoly::linear_form(inv.row(r));
      images_[i].push_back(img.is_zero() ? MPoly(field_, rank_) : img);
    }
    // det(I - t g) as a univariate polynomial in t.
    PolyMatrix tm(field_, 1, rank_, rank_);
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < rank_; ++c) {
        MPoly entry = MPoly::monomial(field_, 1, Monomial::variable(0), -elements_[i](r, c));
        if (r == c) entry += MPoly::constant(field_, 1, 1L);
        tm(r, c) = entry;
      }
    MPoly cp = polymat_det(tm);
    ScalarVector coeffs = zero_vector(field_, rank_ + 1);
    for (const auto& t : cp.terms()) coeffs[t.mono.exp(0)] = t.coef;
    charpoly_[i] = std::move(coeffs);
  }
  cache_ = std::make_shared<ActionCache>();
  for (int i = 0; i < order; ++i) cache_->caches.emplace_back(images_[i]);
}

int ReflectionGroup::index_of(const ScalarMatrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) throw GroupError("matrix is not a group element");
  return it->second;
}

int ReflectionGroup::product(int g, int h) const { return index_of(elements_[g] * elements_[h]); }

void ReflectionGroup::find_hyperplanes(const std::vector<ScalarMatrix>& generators) {
  const int order = this->order();
  ScalarMatrix id = ScalarMatrix::identity(field_, rank_);
  std::unordered_map<std::string, int> by_key;
  std::vector<std::vector<int>> members;
  std::vector<ScalarVector> covectors;
  auto cov_key = [](const ScalarVector& v) {
    std::string k;
    for (const auto& x : v) k += x.to_string() + ";";
    return k;
  };
  for (int g = 1; g < order; ++g) {
    ScalarMatrix d = id - elements_[g];
    if (d.rank() != 1) continue;
    ScalarVector a;
    for (int row = 0; row < rank_ && a.empty(); ++row) {
      ScalarVector r = d.row(row);
      if (std::any_of(r.begin(), r.end(), [](const CycScalar& x) { return !x.is_zero(); })) a = normalize_covector(r);
    }
    auto [it, inserted] = by_key.try_emplace(cov_key(a), static_cast<int>(covectors.size()));
    if (inserted) {
      covectors.push_back(a);
      members.emplace_back();
    }
    members[it->second].push_back(g);
  }
  // Canonical order: support size, support pattern, canonical text.
  std::vector<int> perm(covectors.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto support = [&](int h) {
    std::vector<int> s;
    for (int i = 0; i < rank_; ++i)
      if (!covectors[h][i].is_zero()) s.push_back(i);
    return s;
  };
  std::vector<std::string> text(covectors.size());
  for (size_t h = 0; h < covectors.size(); ++h) text[h] = MPoly::linear_form(covectors[h]).to_string();
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    auto sa = support(a), sb = support(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return text[a] < text[b];
  });
  const int m_cond = field_->conductor();
  for (int idx : perm) {
    Hyperplane h;
    h.covector = covectors[idx];
    h.alpha = MPoly::linear_form(h.covector);
    h.order = static_cast<int>(members[idx].size()) + 1;
    if (m_cond % h.order != 0) throw GroupError("conductor does not contain the hyperplane stabilizer roots");
    CycScalar want = CycScalar::root(field_, m_cond / h.order);
    for (int g : members[idx])
      if (det_[g] == want) h.generator = g;
    if (h.generator < 0) throw GroupError("no stabilizer generator with the canonical determinant");
    int k = 0;
    while (h.covector[k].is_zero()) ++k;
    ScalarMatrix d = id - elements_[h.generator];
    h.coroot = d.col(k);
    hyperplanes_.push_back(std::move(h));
  }
  // Orbits under the generators, numbered by first appearance.
  const int nh = static_cast<int>(hyperplanes_.size());
  std::vector<int> parent(nh);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (const auto& s : generators) {
    ScalarMatrix sinv = s.inverse();
    for (int h = 0; h < nh; ++h) {
      int img = find_hyperplane(sinv.apply_left(hyperplanes_[h].covector));
      if (img < 0) throw GroupError("hyperplane set is not group stable");
      parent[root(h)] = root(img);
    }
  }
  std::unordered_map<int, int> orbit_of_root;
  for (int h = 0; h < nh; ++h) {
    auto [it, inserted] = orbit_of_root.try_emplace(root(h), static_cast<int>(orbits_.size()));
    if (inserted) orbits_.emplace_back();
    hyperplanes_[h].orbit = it->second;
    orbits_[it->second].push_back(h);
  }
}

int ReflectionGroup::find_hyperplane(const ScalarVector& covector) const {
  ScalarVector a = normalize_covector(covector);
  for (size_t h = 0; h < hyperplanes_.size(); ++h)
    if (hyperplanes_[h].covector == a) return static_cast<int>(h);
  return -1;
}

int ReflectionGroup::reflection_count() const {
  int c = 0;
  for (const auto& h : hyperplanes_) c += h.order - 1;
  return c;
}

MPoly ReflectionGroup::act(int g, const MPoly& p) const {
  if (p.is_zero()) return p;
  const int deg = p.degree();
  {
    std::shared_lock lock(cache_->mutex);
    const PowerCache& pc = cache_->caches[g];
    if (pc.prepared_degree() >= deg) return pc.apply(p);
  }
  std::unique_lock lock(cache_->mutex);
  cache_->caches[g].prepare(deg);
  return cache_->caches[g].apply(p);
}

bool MultFn::is_zero() const {
  return std::all_of(per_orbit.begin(), per_orbit.end(), [](int v) { return v == 0; });
}

std::string MultFn::to_string() const {
  std::string s;
  for (size_t i = 0; i < per_orbit.size(); ++i) s += (i ? "," : "") + std::to_string(per_orbit[i]);
  return s;
}

int weighted_hyperplane_sum(const ReflectionGroup& g, const MultFn& m) {
  int s = 0;
  for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) s += m.at(g, h) * g.hyperplanes()[h].order;
  return s;
}

MultFn parse_mult(const ReflectionGroup& g, const std::string& text) {
  std::vector<int> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    if (v < 0) throw std::invalid_argument("multiplicities must be nonnegative");
    vals.push_back(v);
  }
  if (vals.size() == 1) return MultFn::constant(g, vals[0]);
  if (static_cast<int>(vals.size()) != g.num_orbits())
    throw std::invalid_argument("expected " + std::to_string(g.num_orbits()) + " orbit multiplicities");
  return {vals};
}

GroupSpec parse_group_tag(const std::string& tag_in, int rank, int k) {
  std::string tag;
  for (char c : tag_in)
    if (!std::isspace(static_cast<unsigned char>(c))) tag += c;
  std::smatch m;
  auto num = [](const std::ssub_match& s, int fallback) { return s.length() ? std::stoi(s.str()) : fallback; };
  if (std::regex_match(tag, m, std::regex(R"(([ABDS])(\d*))"))) {
    int n = num(m[2], rank);
    if (n <= 0) throw GroupError("rank required for family " + m[1].str());
    char f = m[1].str()[0];
    if (f == 'A') return GroupSpec::type_a(n);
    if (f == 'B') return GroupSpec::type_b(n);
    if (f == 'D') return GroupSpec::type_d(n);
    return GroupSpec::symmetric_ambient(n - 1);
  }
  if (std::regex_match(tag, m, std::regex(R"(I2(?:[(_](\d+)\)?)?(c?))"))) {
    int kk = num(m[1], k);
    if (kk <= 0) throw GroupError("dihedral order parameter required");
    return m[2].length() ? GroupSpec::dihedral_complex(kk) : GroupSpec::dihedral(kk);
  }
  if (std::regex_match(tag, m, std::regex(R"(G[(_]?(\d+)[,_]1[,_](\d+)\)?)")))
    return GroupSpec::complex_monomial(std::stoi(m[1].str()), std::stoi(m[2].str()));
  throw GroupError("unknown group tag '" + tag_in + "'");
}

GroupSpec read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open group file " + path);
  GroupSpec spec;
  spec.family = Family::kCustom;
  spec.label = path;
  std::string line;
  std::vector<std::string> pending_rows;
  int conductor = 1;
  std::vector<std::vector<std::string>> gens;
  bool in_generator = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "family") {
      std::string tag;
      ls >> tag;
      if (tag != "custom") {
        GroupSpec s = parse_group_tag(tag);
        return s;
      }
    } else if (word == "label") {
      std::getline(ls >> std::ws, spec.label);
    } else if (word == "conductor") {
      ls >> conductor;
    } else if (word == "rank") {
      ls >> spec.rank;
    } else if (word == "generator") {
      gens.emplace_back();
      in_generator = true;
    } else if (in_generator) {
      gens.back().push_back(line);
    } else {
      throw GroupError("unexpected line in group file: " + line);
    }
  }
  const CycField* f = CycField::get(conductor);
  for (const auto& rows : gens) {
    if (static_cast<int>(rows.size()) != spec.rank) throw GroupError("generator must have rank rows");
    ScalarMatrix m(f, spec.rank, spec.rank);
    for (int r = 0; r < spec.rank; ++r) {
      std::stringstream rs(rows[r]);
      std::string cell;
      int c = 0;
      while (std::getline(rs, cell, ',')) {
        if (c >= spec.rank) throw GroupError("too many entries in generator row");
        m(r, c++) = parse_scalar(cell, f);
      }
      if (c != spec.rank) throw GroupError("too few entries in generator row");
    }
    spec.generators.push_back(std::move(m));
  }
  spec.conductor = conductor;
  return spec;
}

std::vector<RootDatum> root_data(const ReflectionGroup& g) {
  std::vector<RootDatum> out;
  ScalarMatrix ginv = g.gram().inverse();
  for (int h = 0; h < static_cast<int>(g.hyperplanes().size()); ++h) {
    RootDatum r;
    r.hyperplane = h;
    r.form = g.hyperplanes()[h].covector;
    r.root = ginv.apply(r.form);
    CycScalar norm(g.field());
    for (int i = 0; i < g.rank(); ++i) norm.add_mul(r.form[i], r.root[i]);
    CycScalar scale = CycScalar(g.field(), 2L) / norm;
    r.coroot = r.root;
    for (auto& x : r.coroot) x *= scale;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qinv
