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

// Univariate factorization over a finite field F_q: squarefree decomposition
// with p-th root descent, distinct-degree splitting, then Cantor-Zassenhaus
// equal-degree splitting driven by a caller-supplied seed.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/rings/upoly.hpp"

namespace schinzel {

template <class F>
struct UnivariateFactorization {
  typename F::Element unit;
  std::vector<std::pair<upoly::Poly<F>, unsigned>> factors;
};

namespace ff_detail {

template <class F>
mpz_class field_order(const F& field) {
  return mpz_class(static_cast<unsigned long>(field.size()));
}

template <class F>
upoly::Poly<F> x_poly(const F& field) {
  return upoly::x_power(field, 1);
}

/// g(x) = h(x^p) -> h with coefficients replaced by their p-th roots.
template <class F>
upoly::Poly<F> pth_root_poly(const F& field, const upoly::Poly<F>& g) {
  const std::uint64_t p = field.characteristic();
  upoly::Poly<F> r((g.size() - 1) / p + 1, field.zero());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i % p != 0) {
      if (!field.is_zero(g[i])) throw DomainError("pth_root_poly: not a p-th power");
      continue;
    }
    r[i / p] = field.pth_root(g[i]);
  }
  upoly::trim(field, r);
  return r;
}

template <class F>
bool is_one(const F& field, const upoly::Poly<F>& a) {
  return a.size() == 1 && a[0] == field.one();
}

template <class F>
bool poly_less(const F& field, const upoly::Poly<F>& a, const upoly::Poly<F>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == b[i]) continue;
    return field.less(a[i], b[i]);
  }
  return false;
}

}  // namespace ff_detail

/// Squarefree decomposition of a monic polynomial: pairs (a_i, i) with
/// f = prod a_i^i and every a_i squarefree and pairwise coprime.
template <class F>
std::vector<std::pair<upoly::Poly<F>, unsigned>> squarefree_decomposition(
    const F& field, const upoly::Poly<F>& f) {
  using ff_detail::is_one;
  std::vector<std::pair<upoly::Poly<F>, unsigned>> out;
  if (f.size() <= 1) return out;
  const unsigned p = static_cast<unsigned>(field.characteristic());

  auto g = upoly::gcd(field, f, upoly::derivative(field, f));
  auto w = upoly::quo(field, f, g);
  unsigned i = 1;
  while (!is_one(field, w)) {
    auto y = upoly::gcd(field, w, g);
    auto z = upoly::quo(field, w, y);
    if (!is_one(field, z)) out.emplace_back(std::move(z), i);
    ++i;
    w = std::move(y);
    g = upoly::quo(field, g, w);
  }
  if (!is_one(field, g)) {
    auto root = ff_detail::pth_root_poly(field, g);
    for (auto& [factor, mult] : squarefree_decomposition(field, root)) {
      out.emplace_back(std::move(factor), mult * p);
    }
  }
  return out;
}

/// Distinct-degree factorization of a squarefree monic polynomial: pairs
/// (g_d, d) where g_d is the product of all irreducible factors of degree d.
template <class F>
std::vector<std::pair<upoly::Poly<F>, unsigned>> distinct_degree_factorization(
    const F& field, upoly::Poly<F> f) {
  std::vector<std::pair<upoly::Poly<F>, unsigned>> out;
  const mpz_class q = ff_detail::field_order(field);
  const auto x = ff_detail::x_poly(field);
  auto h = upoly::rem(field, x, f);
  for (unsigned d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
    h = upoly::powmod(field, h, q, f);
    auto g = upoly::gcd(field, upoly::sub(field, h, x), f);
    if (!ff_detail::is_one(field, g)) {
      f = upoly::quo(field, f, g);
      h = upoly::rem(field, h, f);
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.size() > 1) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    out.emplace_back(std::move(f), d);
  }
  return out;
}

/// Split a squarefree monic f whose irreducible factors all have degree d.
template <class F, class Rng>
std::vector<upoly::Poly<F>> equal_degree_factorization(const F& field, const upoly::Poly<F>& f,
                                                       unsigned d, Rng& rng) {
  const std::size_t n = f.size() - 1;
  if (n == d) return {f};
  const mpz_class q = ff_detail::field_order(field);
  const bool char_two = field.characteristic() == 2;
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  const mpz_class half = (qd - 1) / 2;
  const unsigned trace_terms = d * field.degree();

  for (;;) {
    upoly::Poly<F> a(n, field.zero());
    for (auto& c : a) c = field.random(rng);
    upoly::trim(field, a);
    if (a.size() <= 1) continue;

    upoly::Poly<F> b;
    if (char_two) {
      auto term = a;
      b = a;
      for (unsigned j = 1; j < trace_terms; ++j) {
        term = upoly::mulmod(field, term, term, f);
        b = upoly::add(field, b, term);
      }
    } else {
      b = upoly::powmod(field, a, half, f);
      b = upoly::sub(field, b, upoly::constant(field, field.one()));
    }
    auto g = upoly::gcd(field, b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      auto left = equal_degree_factorization(field, g, d, rng);
      auto right = equal_degree_factorization(field, upoly::quo(field, f, g), d, rng);
      left.insert(left.end(), std::make_move_iterator(right.begin()),
                  std::make_move_iterator(right.end()));
      return left;
    }
  }
}

/// Complete factorization over F_q: leading coefficient plus monic
/// irreducible factors with multiplicities, sorted by (degree, coefficients).
template <class F>
UnivariateFactorization<F> factor_univariate_ff(const F& field, const upoly::Poly<F>& f,
                                                std::uint64_t seed = 0) {
  if (f.empty()) throw DomainError("cannot factor the zero polynomial");
  UnivariateFactorization<F> result{f.back(), {}};
  if (f.size() == 1) return result;
  std::mt19937_64 rng(seed);
  auto m = upoly::monic(field, f);
  for (auto& [part, mult] : squarefree_decomposition(field, m)) {
    for (auto& [block, d] : distinct_degree_factorization(field, part)) {
      for (auto& irr : equal_degree_factorization(field, block, d, rng)) {
        result.factors.emplace_back(std::move(irr), mult);
      }
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return ff_detail::poly_less(field, a.first, b.first);
    return a.second < b.second;
  });
  return result;
}

/// Rabin's test: f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r dividing n.
template <class F>
bool is_irreducible_univariate_ff(const F& field, const upoly::Poly<F>& f) {
  if (f.size() <= 1) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  const auto m = upoly::monic(field, f);
  const mpz_class q = ff_detail::field_order(field);
  const auto x = ff_detail::x_poly(field);

  std::vector<std::size_t> prime_divisors;
  std::size_t rest = n;
  for (std::size_t r = 2; r * r <= rest; ++r) {
    if (rest % r == 0) {
      prime_divisors.push_back(r);
      while (rest % r == 0) rest /= r;
    }
  }
  if (rest > 1) prime_divisors.push_back(rest);

  auto frob_power = [&](std::size_t k) {
    auto h = upoly::rem(field, x, m);
    for (std::size_t i = 0; i < k; ++i) h = upoly::powmod(field, h, q, m);
    return h;
  };
  for (std::size_t r : prime_divisors) {
    auto h = frob_power(n / r);
    auto g = upoly::gcd(field, upoly::sub(field, h, x), m);
    if (!ff_detail::is_one(field, g)) return false;
  }
  return upoly::sub(field, frob_power(n), upoly::rem(field, x, m)).empty();
}

/// A proper divisor of f (degree >= 2) when one is found cheaply, std::nullopt
/// when f is irreducible. Distinct-degree steps stop at the first nontrivial
/// gcd; `inconclusive` is set when that gcd is f itself.
template <class F>
std::optional<upoly::Poly<F>> find_proper_divisor_ff(const F& field, const upoly::Poly<F>& f,
                                                     bool& inconclusive) {
  inconclusive = false;
  const auto m = upoly::monic(field, f);
  const std::size_t n = m.size() - 1;
  const auto d = upoly::derivative(field, m);
  if (d.empty()) {
    // m(x) = g(x^p) = h(x)^p over the perfect field.
    return ff_detail::pth_root_poly(field, m);
  }
  auto g = upoly::gcd(field, m, d);
  if (!ff_detail::is_one(field, g)) return g;
  const mpz_class q = ff_detail::field_order(field);
  const auto x = ff_detail::x_poly(field);
  auto h = upoly::rem(field, x, m);
  for (std::size_t i = 1; 2 * i <= n; ++i) {
    h = upoly::powmod(field, h, q, m);
    g = upoly::gcd(field, upoly::sub(field, h, x), m);
    if (ff_detail::is_one(field, g)) continue;
    if (g.size() == m.size()) {
      inconclusive = true;
      return std::nullopt;
    }
    return g;
  }
  return std::nullopt;
}

}  // namespace schinzel
