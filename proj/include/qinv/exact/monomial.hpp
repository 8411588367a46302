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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qinv {

inline constexpr int kMaxVars = 7;

/// Exponent vector packed into one word: byte 7 holds the total degree and
/// bytes 6..0 hold e_1..e_7. Integer order on the packed word is graded-lex
/// order with x1 > x2 > ... > x7, and multiplication is word addition.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> e) {
    if (e.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
    Monomial m;
    int total = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range");
      total += e[i];
      m.bits_ |= static_cast<uint64_t>(e[i]) << shift(static_cast<int>(i));
    }
    if (total > 255) throw std::overflow_error("total degree exceeds 255");
    m.bits_ |= static_cast<uint64_t>(total) << 56;
    return m;
  }

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.bits_ = (static_cast<uint64_t>(power) << shift(i)) | (static_cast<uint64_t>(power) << 56);
    return m;
  }

  int degree() const { return static_cast<int>(bits_ >> 56); }
  int exp(int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xFF); }
  uint64_t bits() const { return bits_; }

  std::vector<int> exponents(int nvars) const {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exp(i);
    return e;
  }

  bool divisible_by(Monomial o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp(i) < o.exp(i)) return false;
    return true;
  }

  Monomial with_exp(int i, int e) const {
    std::vector<int> v = exponents(kMaxVars);
    v[i] = e;
    return from_exponents(v);
  }

  friend Monomial operator*(Monomial a, Monomial b) {
    if (a.degree() + b.degree() > 255) throw std::overflow_error("total degree exceeds 255");
    Monomial m;
    m.bits_ = a.bits_ + b.bits_;
    return m;
  }
  /// Requires divisible_by.
  friend Monomial operator/(Monomial a, Monomial b) {
    Monomial m;
    m.bits_ = a.bits_ - b.bits_;
    return m;
  }

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }
  /// Graded-lex.
  friend bool operator<(Monomial a, Monomial b) { return a.bits_ < b.bits_; }
  friend bool operator>(Monomial a, Monomial b) { return a.bits_ > b.bits_; }

 private:
  static constexpr int shift(int i) { return 8 * (kMaxVars - 1 - i); }
  uint64_t bits_ = 0;
};

struct MonomialHash {
  size_t operator()(Monomial m) const { return std::hash<uint64_t>{}(m.bits() * 0x9E3779B97F4A7C15ull); }
};

/// All exponent vectors of total degree d in n variables, in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace qinv
