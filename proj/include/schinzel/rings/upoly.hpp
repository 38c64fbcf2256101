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

// Dense univariate polynomials over a field descriptor F. A polynomial is a
// coefficient vector, lowest degree first, with no trailing zeros; the zero
// polynomial is the empty vector.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"

namespace schinzel::upoly {

template <class F>
using Poly = std::vector<typename F::Element>;

template <class F>
void trim(const F& field, Poly<F>& a) {
  while (!a.empty() && field.is_zero(a.back())) a.pop_back();
}

template <class F>
Poly<F> constant(const F& field, const typename F::Element& c) {
  if (field.is_zero(c)) return {};
  return {c};
}

template <class F>
Poly<F> x_power(const F& field, std::size_t e) {
  Poly<F> r(e + 1, field.zero());
  r[e] = field.one();
  return r;
}

template <class F>
const typename F::Element& lead(const Poly<F>& a) {
  return a.back();
}

template <class F>
Poly<F> add(const F& field, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = field.add(r[i], b[i]);
  trim(field, r);
  return r;
}

template <class F>
Poly<F> sub(const F& field, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = field.sub(r[i], b[i]);
  trim(field, r);
  return r;
}

template <class F>
Poly<F> neg(const F& field, const Poly<F>& a) {
  Poly<F> r(a.size(), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.neg(a[i]);
  return r;
}

template <class F>
Poly<F> scale(const F& field, const Poly<F>& a, const typename F::Element& c) {
  if (field.is_zero(c)) return {};
  Poly<F> r(a.size(), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.mul(a[i], c);
  trim(field, r);
  return r;
}

template <class F>
Poly<F> mul(const F& field, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
    }
  }
  trim(field, r);
  return r;
}

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& field, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> r = a;
  Poly<F> q(a.size() - b.size() + 1, field.zero());
  const auto inv = field.inverse(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const auto& top = r[k + b.size() - 1];
    if (field.is_zero(top)) continue;
    auto c = field.mul(top, inv);
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[k + j] = field.sub(r[k + j], field.mul(c, b[j]));
    }
  }
  r.resize(b.size() - 1);
  trim(field, r);
  trim(field, q);
  return {std::move(q), std::move(r)};
}

template <class F>
Poly<F> rem(const F& field, const Poly<F>& a, const Poly<F>& b) {
  return divmod(field, a, b).second;
}

template <class F>
Poly<F> quo(const F& field, const Poly<F>& a, const Poly<F>& b) {
  return divmod(field, a, b).first;
}

template <class F>
Poly<F> monic(const F& field, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(field, a, field.inverse(a.back()));
}

template <class F>
Poly<F> gcd(const F& field, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = rem(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(field, a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F& field, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = constant(field, field.one()), s1{};
  Poly<F> t0{}, t1 = constant(field, field.one());
  while (!r1.empty()) {
    auto [q, r] = divmod(field, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(field, s0, mul(field, q, s1));
    auto t2 = sub(field, t0, mul(field, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  auto inv = field.inverse(r0.back());
  return {scale(field, r0, inv), scale(field, s0, inv), scale(field, t0, inv)};
}

template <class F>
Poly<F> derivative(const F& field, const Poly<F>& a) {
  if (a.size() <= 1) return {};
  Poly<F> r(a.size() - 1, field.zero());
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = field.mul(field.from_int(static_cast<long>(i)), a[i]);
  }
  trim(field, r);
  return r;
}

template <class F>
Poly<F> mulmod(const F& field, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return rem(field, mul(field, a, b), m);
}

/// base^e mod m for an arbitrary-precision exponent.
template <class F>
Poly<F> powmod(const F& field, const Poly<F>& base, const mpz_class& e, const Poly<F>& m) {
  Poly<F> result = rem(field, constant(field, field.one()), m);
  Poly<F> b = rem(field, base, m);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(field, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(field, result, b, m);
  }
  return result;
}

template <class F>
typename F::Element evaluate(const F& field, const Poly<F>& a, const typename F::Element& x) {
  auto acc = field.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = field.add(field.mul(acc, x), a[i]);
  return acc;
}

}  // namespace schinzel::upoly
