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

// Ground-truth irreducibility and factorization over a small finite field
// by trial division against every monic candidate divisor in the degree box.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/factorization.hpp"
#include "schinzel/multipoly.hpp"

namespace schinzel {

struct BruteForceOptions {
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
};

namespace brute_detail {

/// Monomials m <= box componentwise with 1 <= |m| <= max_degree.
inline std::vector<Monomial> box_monomials(const std::vector<std::size_t>& box,
                                           std::size_t max_degree) {
  std::vector<Monomial> out;
  Monomial m(box.size(), 0);
  for (;;) {
    const auto d = monomial_degree(m);
    if (d >= 1 && d <= max_degree) out.push_back(m);
    std::size_t i = 0;
    for (; i < m.size(); ++i) {
      if (m[i] < box[i]) {
        ++m[i];
        break;
      }
      m[i] = 0;
    }
    if (i == m.size()) break;
  }
  return out;
}

/// A monic divisor of f of smallest total degree (hence irreducible), or
/// nullopt when f has no nontrivial divisor.
template <class F>
std::optional<MultiPoly<F>> smallest_divisor(const MultiPoly<F>& f, const BruteForceOptions& opt) {
  const F& field = f.ring();
  const auto box = *degree_vector(f);
  const auto tdeg = *total_degree(f);
  if (tdeg < 2) return std::nullopt;
  auto monos = box_monomials(box, tdeg / 2);
  // The constant monomial is a free coordinate too.
  monos.push_back(Monomial(f.nvars(), 0));
  const std::uint64_t q = field.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (total > opt.max_candidates / q) {
      throw BudgetExceeded("brute-force trial division needs more than " +
                           std::to_string(opt.max_candidates) + " candidates");
    }
    total *= q;
  }
  std::optional<MultiPoly<F>> best;
  std::size_t best_degree = tdeg;
  std::vector<std::uint64_t> digits(monos.size(), 0);
  for (std::uint64_t n = 1; n < total; ++n) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    MultiPoly<F> g(field, f.nvars());
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (digits[i] != 0) g.add_term(monos[i], field.element_at(digits[i]));
    }
    if (g.is_constant() || !(g.leading_coeff() == field.one())) continue;
    const auto gd = *total_degree(g);
    if (gd >= best_degree) continue;
    if (divide_exact(f, g)) {
      best = std::move(g);
      best_degree = gd;
    }
  }
  return best;
}

}  // namespace brute_detail

/// Trial division by every monic nonconstant g in f's degree box with
/// deg g <= deg f / 2. Constants are not irreducible.
template <class F>
bool brute_force_irreducible(const MultiPoly<F>& f, const BruteForceOptions& opt = {}) {
  static_assert(F::is_finite, "brute-force oracle needs a finite field");
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  if (f.is_constant()) return false;
  return !brute_detail::smallest_divisor(f, opt).has_value();
}

/// Full factorization by repeatedly splitting off a smallest divisor.
template <class F>
Factorization<F> brute_force_factor(const MultiPoly<F>& f, const BruteForceOptions& opt = {}) {
  static_assert(F::is_finite, "brute-force oracle needs a finite field");
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  const F& field = f.ring();
  Factorization<F> out{field, f.nvars(), field.one(), {}, {"brute-force"}};
  if (f.is_constant()) {
    out.unit = f.constant_term();
    return out;
  }
  out.unit = f.leading_coeff();
  MultiPoly<F> rest = normalize(f);
  while (!rest.is_constant()) {
    auto g = brute_detail::smallest_divisor(rest, opt);
    if (!g) {
      out.factors.emplace_back(rest, 1);
      break;
    }
    rest = *divide_exact(rest, *g);
    out.factors.emplace_back(std::move(*g), 1);
  }
  canonicalize_factors(out.factors);
  return out;
}

}  // namespace schinzel
