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

// Sparse multivariate polynomials over a ring descriptor R.
//
// Terms live in a map keyed by exponent vectors and ordered graded-lex
// descending, so iteration order is the canonical printing order and the
// first term is the leading term. Polynomials know their variable count but
// not their variable names; names are supplied by a VarSet when printing or
// parsing.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/rings/format.hpp"

namespace schinzel {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

/// Degree of a polynomial; nullopt stands for the degree of zero.
using Degree = std::optional<std::size_t>;

inline std::size_t monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Graded lexicographic order, largest first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Ordered, distinct variable names.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw DomainError("duplicate variable " + names_[i]);
      }
    }
  }

  /// x1..xn
  static VarSet numbered(const std::string& stem, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return VarSet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  VarSet concat(const VarSet& other) const {
    auto names = names_;
    names.insert(names.end(), other.names_.begin(), other.names_.end());
    return VarSet(std::move(names));
  }

  bool operator==(const VarSet&) const = default;

 private:
  std::vector<std::string> names_;
};

template <class R>
class MultiPoly {
 public:
  using Ring = R;
  using Coeff = typename R::Element;
  using TermMap = std::map<Monomial, Coeff, GradedLexGreater>;

  MultiPoly(R ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

  static MultiPoly constant(const R& ring, std::size_t nvars, const Coeff& c) {
    MultiPoly p(ring, nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(const R& ring, std::size_t nvars, std::size_t index,
                            Exponent e = 1) {
    if (index >= nvars) throw DomainError("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = e;
    return monomial(ring, nvars, std::move(m), ring.one());
  }

  static MultiPoly monomial(const R& ring, std::size_t nvars, Monomial m, const Coeff& c) {
    if (m.size() != nvars) throw DomainError("monomial length mismatch");
    MultiPoly p(ring, nvars);
    p.add_term(m, c);
    return p;
  }

  const R& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
  }

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Coeff& c) {
    if (m.size() != nvars_) throw DomainError("monomial length mismatch");
    if (ring_.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  Coeff constant_term() const { return coeff(Monomial(nvars_, 0)); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of zero");
    return terms_.begin()->first;
  }

  const Coeff& leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero");
    return terms_.begin()->second;
  }

  void check_compatible(const MultiPoly& other) const {
    if (nvars_ != other.nvars_ || !(ring_ == other.ring_)) {
      throw RingMismatch("polynomials live in different rings or variable sets");
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(ring_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, ring_.neg(c));
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, ring_.neg(c));
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.ring_, a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, a.ring_.mul(ca, cb));
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

  /// Term maps compared exactly.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  MultiPoly scaled(const Coeff& c) const {
    MultiPoly r(ring_, nvars_);
    if (ring_.is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, ring_.mul(v, c));
    return r;
  }

  MultiPoly shifted(const Monomial& by) const {
    MultiPoly r(ring_, nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial s = m;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += by[i];
      r.terms_.emplace_hint(r.terms_.end(), std::move(s), c);
    }
    return r;
  }

 private:
  R ring_;
  std::size_t nvars_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Degrees

template <class R>
Degree total_degree(const MultiPoly<R>& f) {
  if (f.is_zero()) return std::nullopt;
  return monomial_degree(f.leading_monomial());
}

template <class R>
Degree degree_in(const MultiPoly<R>& f, std::size_t var) {
  if (var >= f.nvars()) throw DomainError("unknown variable index " + std::to_string(var));
  if (f.is_zero()) return std::nullopt;
  std::size_t d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max<std::size_t>(d, m[var]);
  return d;
}

/// Partial degrees in every variable; nullopt for the zero polynomial.
template <class R>
std::optional<std::vector<std::size_t>> degree_vector(const MultiPoly<R>& f) {
  if (f.is_zero()) return std::nullopt;
  std::vector<std::size_t> d(f.nvars(), 0);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::max<std::size_t>(d[i], m[i]);
  }
  return d;
}

/// Total degree restricted to the variables in [first, last).
template <class R>
Degree degree_in_range(const MultiPoly<R>& f, std::size_t first, std::size_t last) {
  if (f.is_zero()) return std::nullopt;
  std::size_t d = 0;
  for (const auto& [m, c] : f.terms()) {
    std::size_t s = 0;
    for (std::size_t i = first; i < last; ++i) s += m[i];
    d = std::max(d, s);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Arithmetic helpers

template <class R>
MultiPoly<R> pow(const MultiPoly<R>& f, std::size_t e) {
  auto result = MultiPoly<R>::constant(f.ring(), f.nvars(), f.ring().one());
  auto base = f;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

/// Multiplies f by the inverse of the unit part of its leading coefficient,
/// giving the canonical associate (positive over Z, monic over fields and
/// over k[u]).
template <class R>
MultiPoly<R> normalize(const MultiPoly<R>& f) {
  if (f.is_zero()) return f;
  const auto& ring = f.ring();
  return f.scaled(ring.inverse(ring.unit_part(f.leading_coeff())));
}

/// Exact coefficientwise division by a scalar.
template <class R>
std::optional<MultiPoly<R>> divide_by_scalar(const MultiPoly<R>& f, const typename R::Element& c) {
  MultiPoly<R> r(f.ring(), f.nvars());
  for (const auto& [m, v] : f.terms()) {
    auto q = f.ring().divide(v, c);
    if (!q) return std::nullopt;
    r.add_term(m, *q);
  }
  return r;
}

/// Exact division f / g in R[x]; nullopt when g does not divide f.
template <class R>
std::optional<MultiPoly<R>> divide_exact(const MultiPoly<R>& f, const MultiPoly<R>& g) {
  f.check_compatible(g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& ring = f.ring();
  MultiPoly<R> q(ring, f.nvars());
  if (f.is_zero()) return q;
  auto df = degree_vector(f);
  auto dg = degree_vector(g);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if ((*dg)[i] > (*df)[i]) return std::nullopt;
  }
  MultiPoly<R> r = f;
  const Monomial& lg = g.leading_monomial();
  const auto& cg = g.leading_coeff();
  Monomial shift(f.nvars());
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!monomial_divides(lg, lr)) return std::nullopt;
    auto c = ring.divide(r.leading_coeff(), cg);
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lr[i] - lg[i];
    q.add_term(shift, *c);
    r -= g.shifted(shift).scaled(*c);
  }
  return q;
}

/// Multivariate division with remainder by a single divisor in graded-lex
/// order. Field coefficients only.
template <class R>
std::pair<MultiPoly<R>, MultiPoly<R>> divide_with_remainder(const MultiPoly<R>& f,
                                                            const MultiPoly<R>& g) {
  static_assert(R::is_field, "division with remainder needs field coefficients");
  f.check_compatible(g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& ring = f.ring();
  MultiPoly<R> q(ring, f.nvars()), rem(ring, f.nvars());
  MultiPoly<R> r = f;
  const Monomial& lg = g.leading_monomial();
  const auto inv = ring.inverse(g.leading_coeff());
  Monomial shift(f.nvars());
  while (!r.is_zero()) {
    const Monomial lr = r.leading_monomial();
    const auto lc = r.leading_coeff();
    if (monomial_divides(lg, lr)) {
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lr[i] - lg[i];
      auto c = ring.mul(lc, inv);
      q.add_term(shift, c);
      r -= g.shifted(shift).scaled(c);
    } else {
      rem.add_term(lr, lc);
      r.add_term(lr, ring.neg(lc));
    }
  }
  return {std::move(q), std::move(rem)};
}

// ---------------------------------------------------------------------------
// Variable bookkeeping and substitution

/// Applies `fn` to every coefficient, producing a polynomial over `target`.
template <class S, class R, class Fn>
MultiPoly<S> map_coefficients(const MultiPoly<R>& f, const S& target, Fn&& fn) {
  MultiPoly<S> r(target, f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, fn(c));
  return r;
}

/// Re-embeds f into `nvars` variables: variable i of f becomes variable
/// mapping[i]. Unmapped target variables get exponent zero.
template <class R>
MultiPoly<R> remap_vars(const MultiPoly<R>& f, std::size_t nvars,
                        const std::vector<std::size_t>& mapping) {
  if (mapping.size() != f.nvars()) throw DomainError("variable mapping length mismatch");
  MultiPoly<R> r(f.ring(), nvars);
  for (const auto& [m, c] : f.terms()) {
    Monomial t(nvars, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (mapping[i] >= nvars) throw DomainError("variable mapped out of range");
      t[mapping[i]] += m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

/// Keeps the first `nvars` variables; the dropped ones must not occur.
template <class R>
MultiPoly<R> truncate_vars(const MultiPoly<R>& f, std::size_t nvars) {
  MultiPoly<R> r(f.ring(), nvars);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = nvars; i < m.size(); ++i) {
      if (m[i] != 0) throw DomainError("truncate_vars: dropped variable occurs");
    }
    r.add_term(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(nvars)), c);
  }
  return r;
}

/// Appends unused variables so f has `nvars` variables.
template <class R>
MultiPoly<R> extend_vars(const MultiPoly<R>& f, std::size_t nvars) {
  std::vector<std::size_t> mapping(f.nvars());
  std::iota(mapping.begin(), mapping.end(), std::size_t{0});
  return remap_vars(f, nvars, mapping);
}

/// Coefficients of f as a polynomial in variable `var`: entry k is the
/// coefficient of var^k, with var's exponent cleared.
template <class R>
std::vector<MultiPoly<R>> coefficients_in(const MultiPoly<R>& f, std::size_t var) {
  std::vector<MultiPoly<R>> out;
  const auto d = degree_in(f, var);
  if (!d) return out;
  out.assign(*d + 1, MultiPoly<R>(f.ring(), f.nvars()));
  for (const auto& [m, c] : f.terms()) {
    Monomial t = m;
    t[var] = 0;
    out[m[var]].add_term(t, c);
  }
  return out;
}

/// P with variable `var` replaced by M (same variable count; M must not
/// involve `var`).
template <class R>
MultiPoly<R> substitute_var(const MultiPoly<R>& P, std::size_t var, const MultiPoly<R>& M) {
  P.check_compatible(M);
  if (auto dm = degree_in(M, var); dm && *dm > 0) {
    throw DomainError("substitute_var: replacement involves the substituted variable");
  }
  auto coeffs = coefficients_in(P, var);
  MultiPoly<R> r(P.ring(), P.nvars());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    r = r * M + coeffs[k];
  }
  return r;
}

/// P(x, M(x)) where P has variables (x1..xn, y) and M has (x1..xn).
template <class R>
MultiPoly<R> substitute_y(const MultiPoly<R>& P, const MultiPoly<R>& M) {
  if (P.nvars() != M.nvars() + 1) {
    throw RingMismatch("substitute_y: P must have exactly one more variable than M");
  }
  if (!(P.ring() == M.ring())) throw RingMismatch("substitute_y: ring mismatch");
  const std::size_t n = M.nvars();
  auto r = substitute_var(P, n, extend_vars(M, n + 1));
  return truncate_vars(r, n);
}

/// Partial derivative in variable `var`.
template <class R>
MultiPoly<R> partial_derivative(const MultiPoly<R>& f, std::size_t var) {
  const auto& ring = f.ring();
  MultiPoly<R> r(ring, f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, ring.mul(c, ring.from_int(static_cast<long>(m[var]))));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Content, primitive part, gcd

/// gcd of the coefficients, canonical-unit normalized; zero for f = 0.
template <class R>
typename R::Element content(const MultiPoly<R>& f) {
  const auto& ring = f.ring();
  auto g = ring.zero();
  for (const auto& [m, c] : f.terms()) {
    g = ring.gcd(g, c);
    if (ring.is_unit(g)) break;
  }
  if (ring.is_zero(g)) return g;
  return ring.mul(g, ring.inverse(ring.unit_part(g)));
}

/// f / content(f). The zero polynomial is returned unchanged.
template <class R>
MultiPoly<R> primitive_part(const MultiPoly<R>& f) {
  if (f.is_zero()) return f;
  return *divide_by_scalar(f, content(f));
}

namespace detail {

template <class R>
std::optional<std::size_t> first_variable(const MultiPoly<R>& f, const MultiPoly<R>& g) {
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    if ((f.is_zero() ? 0 : *degree_in(f, v)) > 0) return v;
    if ((g.is_zero() ? 0 : *degree_in(g, v)) > 0) return v;
  }
  return std::nullopt;
}

template <class R>
MultiPoly<R> gcd_rec(const MultiPoly<R>& f, const MultiPoly<R>& g);

/// gcd of the coefficients of f viewed as a polynomial in `var`.
template <class R>
MultiPoly<R> content_in(const MultiPoly<R>& f, std::size_t var) {
  MultiPoly<R> g(f.ring(), f.nvars());
  for (const auto& c : coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant() && f.ring().is_unit(g.constant_term())) break;
  }
  return g;
}

template <class R>
MultiPoly<R> pseudo_remainder(const MultiPoly<R>& a, const MultiPoly<R>& b, std::size_t var) {
  const std::size_t db = *degree_in(b, var);
  const auto bc = coefficients_in(b, var);
  const auto& lcb = bc.back();
  MultiPoly<R> r = a;
  while (!r.is_zero()) {
    const std::size_t dr = *degree_in(r, var);
    if (dr < db) break;
    const auto rc = coefficients_in(r, var);
    Monomial shift(a.nvars(), 0);
    shift[var] = static_cast<Exponent>(dr - db);
    r = lcb * r - (rc.back() * b).shifted(shift);
  }
  return r;
}

template <class R>
MultiPoly<R> gcd_rec(const MultiPoly<R>& f, const MultiPoly<R>& g) {
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  const auto& ring = f.ring();
  const auto var = first_variable(f, g);
  if (!var) {
    auto c = ring.gcd(f.constant_term(), g.constant_term());
    return normalize(MultiPoly<R>::constant(ring, f.nvars(), c));
  }
  const std::size_t v = *var;
  if (*degree_in(f, v) == 0) return gcd_rec(f, content_in(g, v));
  if (*degree_in(g, v) == 0) return gcd_rec(content_in(f, v), g);

  const auto cf = content_in(f, v);
  const auto cg = content_in(g, v);
  const auto c = gcd_rec(cf, cg);
  auto a = *divide_exact(f, cf);
  auto b = *divide_exact(g, cg);
  if (*degree_in(a, v) < *degree_in(b, v)) std::swap(a, b);
  while (!b.is_zero() && *degree_in(b, v) > 0) {
    auto r = pseudo_remainder(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = MultiPoly<R>(ring, f.nvars());
      break;
    }
    b = normalize(*divide_exact(r, content_in(r, v)));
  }
  if (!b.is_zero()) return normalize(c);
  return normalize(c * *divide_exact(a, content_in(a, v)));
}

}  // namespace detail

/// Canonical-unit-normalized gcd in R[x]; both inputs zero is an error.
template <class R>
MultiPoly<R> poly_gcd(const MultiPoly<R>& f, const MultiPoly<R>& g) {
  f.check_compatible(g);
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  return detail::gcd_rec(f, g);
}

// ---------------------------------------------------------------------------
// Printing

inline std::string monomial_to_string(const Monomial& m, const VarSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += format::power(vars[i], m[i]);
  }
  return out;
}

/// Canonical text: graded-lex descending, no zero terms.
template <class R>
std::string to_string(const MultiPoly<R>& f, const VarSet& vars) {
  if (vars.size() != f.nvars()) throw RingMismatch("VarSet size does not match polynomial");
  std::vector<std::string> terms;
  for (const auto& [m, c] : f.terms()) {
    terms.push_back(format::term(f.ring().to_string(c), monomial_to_string(m, vars)));
  }
  return format::join_terms(terms);
}

/// Deterministic total order on polynomials of equal ring: by total degree,
/// then term by term in graded-lex order.
template <class R>
bool canonical_less(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return GradedLexGreater{}(ib->first, ia->first);
    if (!(ia->second == ib->second)) return a.ring().less(ia->second, ib->second);
  }
  return a.size() < b.size();
}

}  // namespace schinzel
