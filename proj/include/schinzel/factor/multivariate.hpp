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

// Multivariate factorization by Kronecker reduction: fold the polynomial to
// one variable, factor the image, then recombine subsets of univariate
// factors by unfolding and trial division.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/factorization.hpp"
#include "schinzel/factor/kronecker.hpp"
#include "schinzel/factor/univariate_ff.hpp"
#include "schinzel/factor/univariate_z.hpp"
#include "schinzel/multipoly.hpp"
#include "schinzel/rings/integers.hpp"
#include "schinzel/rings/poly_ring.hpp"

namespace schinzel {

struct FactorOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
};

template <class T>
struct is_poly_ring : std::false_type {};
template <class F>
struct is_poly_ring<PolyRing<F>> : std::true_type {};
template <class T>
inline constexpr bool is_poly_ring_v = is_poly_ring<T>::value;

/// Scales f by the lcm of its denominators; the result has integer
/// coefficients.
inline MultiPoly<Integers> clear_denominators(const MultiPoly<Rationals>& f) {
  mpz_class l = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return map_coefficients(f, Integers{}, [&](const mpq_class& c) {
    return mpz_class(c.get_num() * (l / c.get_den()));
  });
}

/// k[u][x1..xn] -> k[x1..xn, u], with u as the last variable.
template <class F>
MultiPoly<F> absorb_u(const MultiPoly<PolyRing<F>>& f) {
  const std::size_t n = f.nvars();
  MultiPoly<F> r(f.ring().base(), n + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial t = m;
    t.push_back(0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      t[n] = static_cast<Exponent>(k);
      r.add_term(t, c[k]);
    }
  }
  return r;
}

/// Inverse of absorb_u.
template <class F>
MultiPoly<PolyRing<F>> release_u(const MultiPoly<F>& g, const PolyRing<F>& ring) {
  const std::size_t n = g.nvars() - 1;
  MultiPoly<PolyRing<F>> r(ring, n);
  for (const auto& [m, c] : g.terms()) {
    Monomial t(m.begin(), m.end() - 1);
    r.add_term(t, upoly::mul(ring.base(), upoly::constant(ring.base(), c),
                             upoly::x_power(ring.base(), m[n])));
  }
  return r;
}

namespace factor_detail {

template <class R>
struct UnivariateFactors {
  std::vector<MultiPoly<R>> factors;  // repeated according to multiplicity
  std::string method;
};

inline UnivariateFactors<Integers> factor_univariate(const MultiPoly<Integers>& g,
                                                     const FactorOptions&) {
  auto fac = factor_univariate_integers(to_dense(g));
  UnivariateFactors<Integers> out;
  for (const auto& [h, m] : fac.factors) {
    for (unsigned i = 0; i < m; ++i) out.factors.push_back(from_dense(Integers{}, h));
  }
  out.method = fac.trace.empty() ? "univariate-z" : fac.trace;
  return out;
}

template <class F>
  requires F::is_finite
UnivariateFactors<F> factor_univariate(const MultiPoly<F>& g, const FactorOptions& opt) {
  auto fac = factor_univariate_ff(g.ring(), to_dense(g), opt.seed);
  UnivariateFactors<F> out;
  for (const auto& [h, m] : fac.factors) {
    for (unsigned i = 0; i < m; ++i) out.factors.push_back(from_dense(g.ring(), h));
  }
  out.method = "cantor-zassenhaus seed=" + std::to_string(opt.seed);
  return out;
}

/// Irreducible factors (with repetition) of a primitive f over Z or a
/// finite field. Constants yield an empty list.
template <class R>
std::vector<MultiPoly<R>> factor_primitive(const MultiPoly<R>& f, const FactorOptions& opt,
                                           std::vector<std::string>& trace) {
  if (f.is_constant()) return {};
  const auto dv = *degree_vector(f);
  std::vector<std::size_t> used, compact(f.nvars(), 0);
  for (std::size_t i = 0; i < dv.size(); ++i) {
    if (dv[i] == 0) continue;
    compact[i] = used.size();
    used.push_back(i);
  }
  const std::size_t k = used.size();
  const auto g = remap_vars(f, k, compact);
  const std::uint64_t D = kronecker_base_for(g);
  const auto folded = k == 1 ? g : kronecker_fold(g, D);
  if (k > 1) trace.push_back("kronecker-fold D=" + std::to_string(D));
  auto uni = factor_univariate(folded, opt);
  trace.push_back(uni.method);

  std::vector<MultiPoly<R>> found;
  if (k == 1) {
    for (auto& h : uni.factors) found.push_back(normalize(h));
  } else {
    auto& pool = uni.factors;
    MultiPoly<R> rest = g;
    std::uint64_t tried = 0;
    for (std::size_t s = 1; 2 * s <= pool.size();) {
      bool hit = false;
      std::vector<std::size_t> idx(s);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      // Pool entries are sorted with repeats adjacent; a subset that takes a
      // repeated factor without its left neighbour duplicates another one.
      auto duplicate = [&] {
        for (std::size_t j = 0; j < s; ++j) {
          const std::size_t i = idx[j];
          if (i > 0 && pool[i] == pool[i - 1] && (j == 0 || idx[j - 1] != i - 1)) return true;
        }
        return false;
      };
      for (;;) {
        if (!duplicate()) {
          if (++tried > opt.max_subsets) {
            throw BudgetExceeded("factor recombination exceeded " +
                                 std::to_string(opt.max_subsets) + " subsets");
          }
          auto prod = MultiPoly<R>::constant(g.ring(), 1, g.ring().one());
          for (auto i : idx) prod *= pool[i];
          auto cand = normalize(kronecker_unfold(prod, D, k));
          std::optional<MultiPoly<R>> q;
          if (!cand.is_constant()) q = divide_exact(rest, cand);
          if (q) {
            found.push_back(std::move(cand));
            rest = std::move(*q);
            for (std::size_t j = s; j-- > 0;) {
              pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[j]));
            }
            hit = true;
            break;
          }
        }
        std::size_t pos = s;
        while (pos-- > 0) {
          if (idx[pos] < pool.size() - s + pos) break;
        }
        if (pos == static_cast<std::size_t>(-1)) break;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (!hit) ++s;
    }
    if (!rest.is_constant()) found.push_back(normalize(rest));
    trace.push_back("recombination subsets=" + std::to_string(tried));
  }
  for (auto& h : found) h = remap_vars(h, f.nvars(), used);
  return found;
}

/// Irreducible factors (with repetition) of a primitive f over Z or a
/// finite field. Variables dividing f are split off first, then f is broken
/// into coprime pieces along gcd(f, df/dx_i) so that only squarefree inputs
/// reach the Kronecker fold, whose recombination cost grows with repeats.
template <class R>
std::vector<MultiPoly<R>> factor_split(const MultiPoly<R>& f, const FactorOptions& opt,
                                       std::vector<std::string>& trace) {
  if (f.is_constant()) return {};
  const std::size_t n = f.nvars();
  const R& ring = f.ring();
  std::vector<MultiPoly<R>> out;

  Monomial low = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) low[i] = std::min(low[i], m[i]);
  }
  if (monomial_degree(low) > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (Exponent e = 0; e < low[i]; ++e) out.push_back(MultiPoly<R>::variable(ring, n, i));
    }
    auto rest = *divide_exact(f, MultiPoly<R>::monomial(ring, n, low, ring.one()));
    for (auto& h : factor_split(rest, opt, trace)) out.push_back(std::move(h));
    return out;
  }

  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = partial_derivative(f, i);
    if (d.is_zero()) continue;
    all_zero = false;
    const auto g = poly_gcd(f, d);
    if (g.is_constant()) return factor_primitive(f, opt, trace);
    // deg_{x_i} g < deg_{x_i} f, so g and f / g are both proper divisors.
    auto q = divide_exact(f, g);
    if (!q) throw Error("squarefree split: gcd does not divide");
    out = factor_split(g, opt, trace);
    for (auto& h : factor_split(*q, opt, trace)) out.push_back(std::move(h));
    return out;
  }
  if constexpr (R::is_finite) {
    if (all_zero) {
      // Every exponent is a multiple of p: f = h^p over the perfect field.
      const auto p = ring.characteristic();
      MultiPoly<R> h(ring, n);
      for (const auto& [m, c] : f.terms()) {
        Monomial r = m;
        for (auto& e : r) e = static_cast<Exponent>(e / p);
        h.add_term(r, ring.pth_root(c));
      }
      const auto parts = factor_split(h, opt, trace);
      for (std::uint64_t k = 0; k < p; ++k) out.insert(out.end(), parts.begin(), parts.end());
      return out;
    }
  }
  throw Error("squarefree split: zero derivative in characteristic zero");
}

}  // namespace factor_detail

/// Complete factorization in R[x1..xn] for R = Z, Q, F_q or k[u].
template <class R>
Factorization<R> factor(const MultiPoly<R>& f, const FactorOptions& opt = {}) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  const R& ring = f.ring();
  Factorization<R> out{ring, f.nvars(), ring.one(), {}, {}};

  if constexpr (std::is_same_v<R, Integers>) {
    for (auto& h : factor_detail::factor_split(primitive_part(f), opt, out.trace)) {
      out.factors.emplace_back(std::move(h), 1);
    }
  } else if constexpr (std::is_same_v<R, Rationals>) {
    const auto z = primitive_part(clear_denominators(f));
    for (auto& h : factor_detail::factor_split(z, opt, out.trace)) {
      auto q = map_coefficients(h, ring, [](const mpz_class& c) { return mpq_class(c); });
      out.factors.emplace_back(normalize(q), 1);
    }
  } else if constexpr (is_poly_ring_v<R>) {
    out.trace.push_back("u-as-variable");
    auto inner = factor(absorb_u(f), opt);
    out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());
    for (auto& [h, m] : inner.factors) {
      if (*degree_in_range(h, 0, f.nvars()) == 0) continue;  // u-only: part of the content
      out.factors.emplace_back(normalize(release_u(h, ring)), m);
    }
  } else {
    static_assert(R::is_finite, "unsupported coefficient ring");
    for (auto& h : factor_detail::factor_split(f, opt, out.trace)) {
      out.factors.emplace_back(std::move(h), 1);
    }
  }
  canonicalize_factors(out.factors);

  auto product = MultiPoly<R>::constant(ring, f.nvars(), ring.one());
  for (const auto& [h, m] : out.factors) product *= pow(h, m);
  auto q = divide_exact(f, product);
  if (!q || !q->is_constant()) throw Error("factorization does not recompose");
  out.unit = q->constant_term();
  return out;
}

template <class R>
struct IrreducibilityCertificate {
  bool irreducible = false;
  std::string reason;  // "irreducible", "unit/constant", "content", "reducible"
  std::optional<MultiPoly<R>> factor;
};

/// Irreducibility in R[x1..xn]: nonconstant, unit content over R and
/// irreducible over the fraction field. Constants report false.
template <class R>
IrreducibilityCertificate<R> is_irreducible(const MultiPoly<R>& f, const FactorOptions& opt = {}) {
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  IrreducibilityCertificate<R> cert;
  const R& ring = f.ring();
  if (f.is_constant()) {
    cert.reason = "unit/constant";
    return cert;
  }
  const auto c = content(f);
  if (!ring.is_unit(c)) {
    cert.reason = "content";
    cert.factor = MultiPoly<R>::constant(ring, f.nvars(), c);
    return cert;
  }
  if (*total_degree(f) == 1) {
    cert.irreducible = true;
    cert.reason = "irreducible";
    return cert;
  }
  if constexpr (R::is_finite) {
    // One variable present: decide without a full factorization.
    const auto dv = *degree_vector(f);
    std::size_t var = 0, present = 0;
    for (std::size_t i = 0; i < dv.size(); ++i) {
      if (dv[i] > 0) var = i, ++present;
    }
    if (present == 1) {
      std::vector<std::size_t> mapping(f.nvars(), 0);
      const auto dense = to_dense(remap_vars(f, 1, mapping));
      bool inconclusive = false;
      auto g = find_proper_divisor_ff(ring, dense, inconclusive);
      if (!inconclusive) {
        cert.irreducible = !g.has_value();
        cert.reason = g ? "reducible" : "irreducible";
        if (g) {
          std::vector<std::size_t> back{var};
          cert.factor = remap_vars(from_dense(ring, *g), f.nvars(), back);
        }
        return cert;
      }
    }
  }
  auto fac = factor(f, opt);
  if (fac.factor_count() == 1) {
    cert.irreducible = true;
    cert.reason = "irreducible";
  } else {
    cert.reason = "reducible";
    cert.factor = fac.factors.front().first;
  }
  return cert;
}

template <class R>
bool irreducible(const MultiPoly<R>& f, const FactorOptions& opt = {}) {
  return is_irreducible(f, opt).irreducible;
}

}  // namespace schinzel
