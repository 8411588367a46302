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

#include "qinv/exact/parse.hpp"

#include <cctype>

namespace qinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const CycField* field, int nvars, std::vector<std::string> names)
      : text_(text), field_(field), nvars_(nvars), names_(std::move(names)) {
    if (names_.empty()) names_ = default_var_names(nvars_);
  }

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip_ws();
      bool neg = accept('-');
      long e = integer();
      if (neg) {
        if (!base.is_constant() || base.is_zero()) fail("negative power of a non-constant");
        return MPoly::constant(field_, nvars_, base.constant_term().pow(-e));
      }
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational v(std::string(text_.substr(start, pos_ - start)));
      return MPoly::constant(field_, nvars_, CycScalar(field_, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (int i = 0; i < nvars_; ++i)
        if (names_[i] == name) return MPoly::variable(field_, nvars_, i);
      if (name == "z") return MPoly::constant(field_, nvars_, CycScalar::root(field_, 1));
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
  const CycField* field_;
  int nvars_;
  std::vector<std::string> names_;
};

}  // namespace

MPoly parse_poly(std::string_view text, const CycField* field, int nvars, const std::vector<std::string>& names) {
  return Parser(text, field, nvars, names).parse();
}

CycScalar parse_scalar(std::string_view text, const CycField* field) {
  MPoly p = Parser(text, field, 1, {"\x01"}).parse();
  if (!p.is_constant()) throw ParseError("scalar expected: " + std::string(text));
  return p.constant_term();
}

}  // namespace qinv
