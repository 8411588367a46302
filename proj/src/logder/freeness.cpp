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

#include "qinv/logder/freeness.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qinv/exact/linalg.hpp"
#include "qinv/exact/polymatrix.hpp"

namespace qinv {

int FreenessCertificate::exponent_sum() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

uint64_t arrangement_hash(const MultiArrangement& arr) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : arr.canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

/// Rank of the coefficient matrix at a fixed rational point, a lower bound for the generic rank.
int sample_rank(const std::vector<Derivation>& fields, int nvars) {
  const CycField* f = fields.front().field();
  ScalarVector point;
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  for (int i = 0; i < nvars; ++i) point.emplace_back(f, primes[i % 8] + 10L * (i / 8));
  ScalarMatrix m(f, static_cast<int>(fields.size()), nvars);
  for (size_t i = 0; i < fields.size(); ++i)
    for (int j = 0; j < nvars; ++j) m(static_cast<int>(i), j) = fields[i].components[j].evaluate(point);
  return m.rank();
}

}  // namespace

FreenessCertificate saito_certificate(const MultiArrangement& arr, const std::vector<Derivation>& fields) {
  FreenessCertificate cert;
  cert.label = arr.label;
  cert.arrangement_hash = arrangement_hash(arr);
  cert.multiplicities = arr.multiplicity;
  cert.target_degree = arr.total_multiplicity();
  cert.basis = fields;
  cert.scalar = CycScalar(arr.field);
  cert.determinant = MPoly(arr.field, arr.nvars);
  cert.residual = MPoly(arr.field, arr.nvars);
  for (const auto& f : fields) cert.exponents.push_back(f.is_zero() ? -1 : f.degree());
  std::sort(cert.exponents.begin(), cert.exponents.end());
  if (static_cast<int>(fields.size()) != arr.nvars) {
    cert.reason = "expected " + std::to_string(arr.nvars) + " fields, got " + std::to_string(fields.size());
    return cert;
  }
  for (size_t i = 0; i < fields.size(); ++i) {
    MembershipWitness w = derivation_member(fields[i], arr);
    if (!w.ok) {
      cert.reason = "field " + std::to_string(i + 1) + " not logarithmic along " + arr.forms[w.hyperplane].to_string() +
                    ": order " + std::to_string(w.exponent) + " < " + std::to_string(w.required);
      return cert;
    }
  }
  PolyMatrix m(arr.field, arr.nvars, arr.nvars, arr.nvars);
  for (int i = 0; i < arr.nvars; ++i)
    for (int j = 0; j < arr.nvars; ++j) m(i, j) = fields[i].components[j];
  cert.determinant = polymat_det(m);
  if (cert.determinant.is_zero()) {
    cert.reason = "determinant vanishes; rank at sample point " + std::to_string(sample_rank(fields, arr.nvars));
    return cert;
  }
  MPoly q = cert.determinant;
  for (int h = 0; h < arr.size(); ++h) {
    DivisionResult r = poly_div_linear_power(q, arr.forms[h], arr.multiplicity[h]);
    if (!r.divisible()) {
      cert.residual = q;
      cert.reason = "determinant has order " + std::to_string(r.max_exponent) + " < " +
                    std::to_string(arr.multiplicity[h]) + " along " + arr.forms[h].to_string();
      return cert;
    }
    q = *r.quotient;
  }
  cert.residual = q;
  if (!q.is_constant()) {
    cert.reason = "residual factor " + q.to_string() + " of degree " + std::to_string(q.degree());
    return cert;
  }
  cert.scalar = q.constant_term();
  cert.pass = true;
  cert.reason = "determinant = c * defining polynomial";
  return cert;
}

namespace {

/// Keeps homogeneous fields independent of the polynomial multiples of earlier ones.
class GreedySelector {
 public:
  explicit GreedySelector(const CycField* field, int nvars) : field_(field), nvars_(nvars), span_(field) {}

  bool offer(const Derivation& top) {
    if (top.is_zero()) return false;
    const int d = top.degree();
    if (d != degree_) rebuild(d);
    if (!span_.insert(tuple_to_row(top.components, idx_))) return false;
    chosen_.push_back(top);
    return true;
  }
  int count() const { return static_cast<int>(chosen_.size()); }

 private:
  void rebuild(int d) {
    degree_ = d;
    span_ = EchelonBasis(field_);
    idx_ = MonomialIndexer();
    for (const auto& c : chosen_) {
      const int b = c.degree();
      if (b > d) continue;
      for (Monomial mono : monomials_of_degree(nvars_, d - b)) {
        MPoly mult = MPoly::monomial(field_, nvars_, mono, CycScalar(field_, 1L));
        span_.insert(tuple_to_row(c.multiplied(mult).components, idx_));
      }
    }
  }

  const CycField* field_;
  int nvars_;
  int degree_ = -1;
  EchelonBasis span_;
  MonomialIndexer idx_;
  std::vector<Derivation> chosen_;
};

}  // namespace

FreenessCertificate free_basis(const MultiArrangement& arr, const DerivationSource& source, int min_degree,
                               int max_degree) {
  GreedySelector sel(arr.field, arr.nvars);
  std::vector<Derivation> chosen;
  for (int d = std::max(0, min_degree); d <= max_degree && sel.count() < arr.nvars; ++d) {
    std::vector<Derivation> cands = source(d);
    std::vector<std::pair<std::string, size_t>> order;
    for (size_t i = 0; i < cands.size(); ++i) order.emplace_back(cands[i].to_string(), i);
    std::sort(order.begin(), order.end());
    for (const auto& [text, i] : order) {
      if (sel.count() == arr.nvars) break;
      const Derivation& c = cands[i];
      if (c.is_zero()) continue;
      if (!c.is_homogeneous() || c.degree() != d)
        throw std::logic_error("generator source returned a field outside degree " + std::to_string(d));
      if (sel.offer(c)) chosen.push_back(c);
    }
  }
  if (sel.count() < arr.nvars) {
    FreenessCertificate cert = saito_certificate(arr, chosen);
    cert.reason = "cutoff " + std::to_string(max_degree) + " reached with " + std::to_string(sel.count()) + " of " +
                  std::to_string(arr.nvars) + " generators";
    return cert;
  }
  return saito_certificate(arr, chosen);
}

std::vector<Derivation> select_by_leading_terms(const std::vector<Derivation>& candidates, int count) {
  std::map<int, std::vector<size_t>> by_degree;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (!candidates[i].is_zero()) by_degree[candidates[i].degree()].push_back(i);
  std::vector<Derivation> out;
  if (candidates.empty()) return out;
  GreedySelector sel(candidates.front().field(), candidates.front().nvars());
  for (const auto& [d, idxs] : by_degree)
    for (size_t i : idxs) {
      if (sel.count() == count) return out;
      if (sel.offer(candidates[i].top_part())) out.push_back(candidates[i]);
    }
  return out;
}

FreenessCertificate coned_free_check(const MultiArrangement& arr, const std::vector<Derivation>& fields) {
  std::vector<Derivation> coned;
  for (const auto& f : fields) coned.push_back(cone_derivation(f));
  coned.push_back(euler_field(arr.field, arr.nvars + 1));
  return saito_certificate(cone(arr), coned);
}

std::string serialize_certificate(const FreenessCertificate& cert) {
  std::ostringstream os;
  os << "certificate 1\n";
  os << "arrangement " << cert.label << "\n";
  os << "hash " << std::hex << std::setw(16) << std::setfill('0') << cert.arrangement_hash << std::dec << "\n";
  os << "multiplicities";
  for (int r : cert.multiplicities) os << " " << r;
  os << "\n";
  os << "target_degree " << cert.target_degree << "\n";
  os << "exponents";
  for (int e : cert.exponents) os << " " << e;
  os << "\n";
  os << "scalar " << cert.scalar.to_string() << "\n";
  for (size_t i = 0; i < cert.basis.size(); ++i) os << "basis." << (i + 1) << " " << cert.basis[i].to_string() << "\n";
  os << "verdict " << (cert.pass ? "PASS" : "FAIL") << "\n";
  os << "reason " << cert.reason << "\n";
  return os.str();
}

}  // namespace qinv
