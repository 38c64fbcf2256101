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

// Capelli's criterion: b*y^rho + a (a, b coprime) is irreducible over K(x)
// iff -a/b is not an l-th power in K(x) for every prime l | rho, and
// -a/b is not in -4*K(x)^4 when 4 | rho.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <type_traits>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/multivariate.hpp"
#include "schinzel/factor/univariate_ff.hpp"
#include "schinzel/rings/integers.hpp"
#include "schinzel/rings/poly_ring.hpp"

namespace schinzel {

namespace capelli_detail {

inline std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_integer_power(const mpz_class& n, unsigned l) {
  if (sgn(n) < 0) {
    if (l % 2 == 0) return false;
    return is_integer_power(mpz_class(-n), l);
  }
  return mpz_root(mpz_class().get_mpz_t(), n.get_mpz_t(), l) != 0;
}

inline bool is_power(const mpq_class& c, unsigned l) {
  return is_integer_power(c.get_num(), l) && is_integer_power(c.get_den(), l);
}

template <class F>
typename F::Element field_pow(const F& field, typename F::Element a, mpz_class e) {
  auto r = field.one();
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = field.mul(r, a);
    a = field.mul(a, a);
    e >>= 1;
  }
  return r;
}

/// c (nonzero) is an l-th power in F_q.
template <class F>
  requires F::is_finite
bool is_power(const F& field, const typename F::Element& c, unsigned l) {
  if (l == field.characteristic()) return true;
  const mpz_class q1 = mpz_class(static_cast<unsigned long>(field.size())) - 1;
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), q1.get_mpz_t(), l);
  return field_pow(field, c, q1 / g) == field.one();
}

/// num/den (nonzero) is an l-th power in k(u).
template <class F>
bool is_power(const PolyRing<F>& ring, upoly::Poly<F> num, upoly::Poly<F> den, unsigned l) {
  const F& k = ring.base();
  const auto g = upoly::gcd(k, num, den);
  num = upoly::quo(k, num, g);
  den = upoly::quo(k, den, g);
  for (const auto* part : {&num, &den}) {
    for (const auto& [h, m] : factor_univariate_ff(k, *part).factors) {
      if (m % l != 0) return false;
    }
  }
  return is_power(k, k.mul(num.back(), k.inverse(den.back())), l);
}

/// scalar * prod(a-factors) / prod(b-factors) is an l-th power in K(x).
template <class R>
bool is_power(const Factorization<R>& a, const Factorization<R>& b, unsigned l, long extra_den) {
  for (const auto* fac : {&a, &b}) {
    for (const auto& [h, m] : fac->factors) {
      if (m % l != 0) return false;
    }
  }
  const R& ring = a.ring;
  // Scalar part: -unit(a) / (extra_den * unit(b)) with extra_den = 1 for the
  // plain test and -4 for the -4K^4 test.
  const auto num = ring.neg(a.unit);
  const auto den = ring.mul(b.unit, ring.from_int(extra_den));
  if constexpr (std::is_same_v<R, Integers>) {
    mpq_class q(num, den);
    q.canonicalize();
    return is_power(q, l);
  } else if constexpr (std::is_same_v<R, Rationals>) {
    return is_power(mpq_class(num / den), l);
  } else if constexpr (is_poly_ring_v<R>) {
    return is_power(ring, num, den, l);
  } else {
    return is_power(ring, ring.mul(num, ring.inverse(den)), l);
  }
}

}  // namespace capelli_detail

/// True iff b*y^rho + a is irreducible over K(x), by Capelli's criterion.
template <class R>
bool capelli_check(const MultiPoly<R>& a, const MultiPoly<R>& b, unsigned rho,
                   const FactorOptions& opt = {}) {
  if (a.is_zero() || b.is_zero()) throw DomainError("capelli_check needs nonzero a and b");
  if (rho == 0) throw DomainError("capelli_check needs rho >= 1");
  const auto g = poly_gcd(a, b);
  if (!g.is_constant()) throw DomainError("capelli_check needs coprime a and b");
  if (rho == 1) return true;
  const auto fa = factor(a, opt);
  const auto fb = factor(b, opt);
  for (unsigned l : capelli_detail::prime_divisors(rho)) {
    if (capelli_detail::is_power(fa, fb, l, 1)) return false;
  }
  if (rho % 4 == 0 && a.ring().characteristic() != 2) {
    if (capelli_detail::is_power(fa, fb, 4, -4)) return false;
  }
  return true;
}

}  // namespace schinzel
