// Copyright 2026 The Schinzel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Polynomial text reader. Grammar (whitespace-insensitive):
//   expr   := ['+'|'-'] term {('+'|'-') term}
//   term   := factor {['*'|'/'] factor}      juxtaposition multiplies
//   factor := atom ['^' integer]
//   atom   := integer | name | '(' expr ')'
// Names are variables from the VarSet, plus the ring generators: t in
// extension fields and u in k[u]. Division is by nonzero constants only.
// The Unicode minus sign is accepted as '-'.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/multivariate.hpp"
#include "schinzel/multipoly.hpp"
#include "schinzel/rings/extension_field.hpp"
#include "schinzel/rings/integers.hpp"
#include "schinzel/rings/poly_ring.hpp"

namespace schinzel {

template <class R>
typename R::Element element_from_integer(const R& ring, const mpz_class& v) {
  if constexpr (std::is_same_v<R, Integers>) {
    return v;
  } else if constexpr (is_poly_ring_v<R>) {
    return ring.from_base(element_from_integer(ring.base(), v));
  } else {
    return ring.from_integer(v);
  }
}

namespace parse_detail {

/// Ring generator names usable in coefficients.
template <class R>
std::vector<std::string> generator_names() {
  if constexpr (std::is_same_v<R, ExtensionField>) {
    return {"t"};
  } else if constexpr (is_poly_ring_v<R>) {
    if constexpr (std::is_same_v<typename R::Base, ExtensionField>) {
      return {"t", "u"};
    } else {
      return {"u"};
    }
  } else {
    return {};
  }
}

template <class R>
typename R::Element generator(const R& ring, const std::string& name) {
  if constexpr (std::is_same_v<R, ExtensionField>) {
    return ring.generator();
  } else if constexpr (is_poly_ring_v<R>) {
    if (name == "u") return ring.variable();
    if constexpr (std::is_same_v<typename R::Base, ExtensionField>) {
      return ring.from_base(ring.base().generator());
    }
  }
  throw DomainError("ring " + ring.name() + " has no generator " + name);
}

struct Lexer {
  std::string text;
  std::size_t pos = 0;

  explicit Lexer(std::string s) : text(normalize(std::move(s))) {}

  // U+2212 MINUS SIGN -> '-', padded so byte offsets stay put.
  static std::string normalize(std::string s) {
    const std::string minus = "\xE2\x88\x92";
    for (std::size_t i = s.find(minus); i != std::string::npos; i = s.find(minus, i)) {
      s.replace(i, minus.size(), "-  ");
    }
    return s;
  }

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  std::string number() {
    skip();
    const auto start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }
  std::string name() {
    skip();
    const auto start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }
};

template <class R>
class Parser {
 public:
  Parser(const R& ring, const VarSet& vars, const std::string& text)
      : ring_(ring), vars_(vars), lex_(text) {}

  MultiPoly<R> run() {
    if (lex_.peek() == '\0') throw ParseError("empty polynomial", lex_.pos);
    auto f = expr();
    if (lex_.peek() != '\0') throw ParseError(std::string("unexpected '") + lex_.peek() + "'", lex_.pos);
    return f;
  }

 private:
  MultiPoly<R> constant(const typename R::Element& c) const {
    return MultiPoly<R>::constant(ring_, vars_.size(), c);
  }

  MultiPoly<R> expr() {
    MultiPoly<R> acc(ring_, vars_.size());
    bool negate = false;
    if (lex_.accept('-')) {
      negate = true;
    } else {
      (void)lex_.accept('+');
    }
    for (;;) {
      auto t = term();
      acc = negate ? acc - t : acc + t;
      if (lex_.accept('+')) {
        negate = false;
      } else if (lex_.accept('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  static bool starts_atom(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  MultiPoly<R> term() {
    auto acc = factor();
    for (;;) {
      const char c = lex_.peek();
      if (c == '*') {
        ++lex_.pos;
        acc *= factor();
      } else if (c == '/') {
        ++lex_.pos;
        const auto at = lex_.pos;
        const auto d = factor();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        auto q = divide_by_scalar(acc, d.constant_term());
        if (!q) throw ParseError("quotient is not in " + ring_.name(), at);
        acc = std::move(*q);
      } else if (starts_atom(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MultiPoly<R> factor() {
    auto base = atom();
    if (lex_.accept('^')) {
      const auto at = lex_.pos;
      const auto digits = lex_.number();
      if (digits.empty()) throw ParseError("expected an exponent", at);
      if (digits.size() > 6) throw ParseError("exponent too large", at);
      base = pow(base, std::stoul(digits));
    }
    return base;
  }

  MultiPoly<R> atom() {
    const char c = lex_.peek();
    const auto at = lex_.pos;
    if (c == '(') {
      ++lex_.pos;
      auto inner = expr();
      if (!lex_.accept(')')) throw ParseError("expected ')'", lex_.pos);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(element_from_integer(ring_, mpz_class(lex_.number())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto id = lex_.name();
      if (auto i = vars_.index_of(id)) {
        Monomial m(vars_.size(), 0);
        m[*i] = 1;
        return MultiPoly<R>::monomial(ring_, vars_.size(), m, ring_.one());
      }
      const auto gens = generator_names<R>();
      if (std::find(gens.begin(), gens.end(), id) != gens.end()) return constant(generator(ring_, id));
      throw ParseError("unknown variable '" + id + "'", at);
    }
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  const R& ring_;
  const VarSet& vars_;
  Lexer lex_;
};

/// "x10" after "x2": digit runs compare numerically.
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

inline bool is_y_name(const std::string& s) {
  if (s.empty() || s[0] != 'y') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace parse_detail

template <class R>
MultiPoly<R> parse_poly(const std::string& text, const R& ring, const VarSet& vars) {
  return parse_detail::Parser<R>(ring, vars, text).run();
}

/// Identifiers used in the texts, minus the ring generators.
template <class R>
std::set<std::string> collect_names(const std::vector<std::string>& texts) {
  std::set<std::string> names;
  const auto gens = parse_detail::generator_names<R>();
  for (const auto& text : texts) {
    parse_detail::Lexer lex(text);
    while (lex.pos < lex.text.size()) {
      const char c = lex.text[lex.pos];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        auto id = lex.name();
        if (std::find(gens.begin(), gens.end(), id) == gens.end()) names.insert(id);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        (void)lex.number();
      } else {
        ++lex.pos;
      }
    }
  }
  return names;
}

struct InferredVars {
  VarSet x;
  VarSet y;
};

/// Splits the names in the texts into x variables and y variables (y, y1,
/// y2, ...), each in natural order.
template <class R>
InferredVars infer_vars(const std::vector<std::string>& texts) {
  std::vector<std::string> xs, ys;
  for (const auto& s : collect_names<R>(texts)) (parse_detail::is_y_name(s) ? ys : xs).push_back(s);
  std::sort(xs.begin(), xs.end(), parse_detail::natural_less);
  std::sort(ys.begin(), ys.end(), parse_detail::natural_less);
  return {VarSet(xs), VarSet(ys)};
}

}  // namespace schinzel
