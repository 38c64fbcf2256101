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

// Kronecker substitution x_i -> x^(D^(i-1)). Injective on polynomials whose
// partial degrees are all < D, and multiplicative on products that stay in
// that box.

#include <cstdint>
#include <limits>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/multipoly.hpp"

namespace schinzel {

struct KroneckerMap {
  std::uint64_t base = 2;   // D
  std::size_t nvars = 1;    // number of folded variables

  /// D^n, the exclusive bound on folded degrees.
  std::uint64_t degree_bound() const {
    std::uint64_t b = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (b > std::numeric_limits<Exponent>::max() / base) {
        throw DomainError("Kronecker fold degree bound exceeds the exponent range");
      }
      b *= base;
    }
    return b;
  }
};

/// Smallest admissible D for f: 1 + max partial degree.
template <class R>
std::uint64_t kronecker_base_for(const MultiPoly<R>& f) {
  std::uint64_t d = 0;
  if (auto dv = degree_vector(f)) {
    for (auto e : *dv) d = std::max<std::uint64_t>(d, e);
  }
  return d + 1;
}

/// Univariate image S_D(f), as a one-variable MultiPoly.
template <class R>
MultiPoly<R> kronecker_fold(const MultiPoly<R>& f, std::uint64_t D) {
  if (D < 2) throw DomainError("Kronecker base must be at least 2");
  const KroneckerMap map{D, f.nvars()};
  (void)map.degree_bound();
  MultiPoly<R> g(f.ring(), 1);
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t e = 0, scale = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] >= D) {
        throw DomainError("Kronecker base " + std::to_string(D) +
                          " too small: partial degree " + std::to_string(m[i]));
      }
      e += m[i] * scale;
      scale *= D;
    }
    g.add_term(Monomial{static_cast<Exponent>(e)}, c);
  }
  return g;
}

/// The unique preimage with all partial degrees < D.
template <class R>
MultiPoly<R> kronecker_unfold(const MultiPoly<R>& g, std::uint64_t D, std::size_t n) {
  if (g.nvars() != 1) throw DomainError("kronecker_unfold expects a univariate polynomial");
  if (D < 2) throw DomainError("Kronecker base must be at least 2");
  const std::uint64_t bound = KroneckerMap{D, n}.degree_bound();
  MultiPoly<R> f(g.ring(), n);
  for (const auto& [m, c] : g.terms()) {
    std::uint64_t e = m[0];
    if (e >= bound) {
      throw DomainError("kronecker_unfold: degree " + std::to_string(e) + " >= D^n");
    }
    Monomial t(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<Exponent>(e % D);
      e /= D;
    }
    f.add_term(t, c);
  }
  return f;
}

/// Coefficient vector of a univariate MultiPoly, lowest degree first.
template <class R>
std::vector<typename R::Element> to_dense(const MultiPoly<R>& g) {
  if (g.nvars() != 1) throw DomainError("to_dense expects a univariate polynomial");
  std::vector<typename R::Element> out;
  if (g.is_zero()) return out;
  out.assign(g.leading_monomial()[0] + 1, g.ring().zero());
  for (const auto& [m, c] : g.terms()) out[m[0]] = c;
  return out;
}

template <class R>
MultiPoly<R> from_dense(const R& ring, const std::vector<typename R::Element>& coeffs) {
  MultiPoly<R> g(ring, 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    g.add_term(Monomial{static_cast<Exponent>(i)}, coeffs[i]);
  }
  return g;
}

}  // namespace schinzel
