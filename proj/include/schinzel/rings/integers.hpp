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

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"

namespace schinzel {

/// Unit times a list of (irreducible element, multiplicity) pairs.
template <class R>
struct ElementFactorization {
  typename R::Element unit;
  std::vector<std::pair<typename R::Element, unsigned>> factors;
};

/// The integers. Canonical associates are nonnegative.
struct Integers {
  using Element = mpz_class;
  static constexpr bool is_field = false;
  static constexpr bool is_finite = false;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return v; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }

  std::optional<Element> divide(const Element& a, const Element& b) const {
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
      return std::nullopt;
    }
    Element q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  bool is_unit(const Element& a) const { return a == 1 || a == -1; }
  Element unit_part(const Element& a) const { return sgn(a) < 0 ? -1 : 1; }
  Element inverse(const Element& unit) const { return unit; }

  Element gcd(const Element& a, const Element& b) const {
    Element g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Z"; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool less(const Element& a, const Element& b) const { return a < b; }

  bool operator==(const Integers&) const = default;
};

/// The rationals, used as the fraction field of Integers.
struct Rationals {
  using Element = mpq_class;
  static constexpr bool is_field = true;
  static constexpr bool is_finite = false;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return v; }
  Element from_integer(const mpz_class& v) const { return mpq_class(v); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }

  std::optional<Element> divide(const Element& a, const Element& b) const {
    if (sgn(b) == 0) return std::nullopt;
    return Element(a / b);
  }

  bool is_unit(const Element& a) const { return sgn(a) != 0; }
  Element unit_part(const Element& a) const { return sgn(a) == 0 ? one() : a; }
  Element inverse(const Element& a) const {
    if (sgn(a) == 0) throw DomainError("inverse of zero in Q");
    return Element(1 / a);
  }

  Element gcd(const Element& a, const Element& b) const {
    return (sgn(a) == 0 && sgn(b) == 0) ? zero() : one();
  }

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool less(const Element& a, const Element& b) const { return a < b; }

  bool operator==(const Rationals&) const = default;
};

namespace detail {

inline mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class y = 2 + seed, c = 1 + seed, m = 128;
  mpz_class g = 1, r = 1, q = 1, x, ys;
  auto step = [&](const mpz_class& v) {
    mpz_class t = v * v + c;
    mpz_class out;
    mpz_mod(out.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return out;
  };
  while (g == 1) {
    x = y;
    for (mpz_class i = 0; i < r; ++i) y = step(y);
    mpz_class k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (mpz_class i = 0; i < m && i < r - k; ++i) {
        y = step(y);
        mpz_class diff = abs(x - y);
        q = (q * diff) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(mpz_class(abs(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

inline void factor_positive(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  for (unsigned long seed = 0;; ++seed) {
    mpz_class d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_positive(d, out);
      factor_positive(n / d, out);
      return;
    }
  }
}

}  // namespace detail

/// Factor a nonzero integer: trial division up to 2^20, then Pollard rho.
inline ElementFactorization<Integers> factor_integer(const mpz_class& a) {
  if (sgn(a) == 0) throw DomainError("cannot factor zero");
  ElementFactorization<Integers> result{sgn(a) < 0 ? -1 : 1, {}};
  mpz_class n = abs(a);
  auto push = [&](const mpz_class& p) {
    if (!result.factors.empty() && result.factors.back().first == p) {
      ++result.factors.back().second;
    } else {
      result.factors.emplace_back(p, 1);
    }
  };
  constexpr unsigned long kTrialLimit = 1ul << 20;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (n == 1) break;
    if (mpz_class(p) * p > n) {
      push(n);
      n = 1;
      break;
    }
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      push(p);
      n /= p;
    }
  }
  if (n != 1) {
    std::vector<mpz_class> rest;
    detail::factor_positive(n, rest);
    std::sort(rest.begin(), rest.end());
    for (const auto& p : rest) push(p);
  }
  return result;
}

}  // namespace schinzel
