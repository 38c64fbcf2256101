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

// Goldbach decompositions Q = F + G with F, G irreducible and F a binomial
// a + b*x^e. Degree-1 univariate inputs use the closed-form table; all other
// inputs search M = lambda0 + lambda1*Q1 with F = -M, G = M + Q, where
// lambda0 = 1 - q0 (mod q_inf) and lambda1 = 1 (mod lambda0). Over finite
// fields a failed binomial search is followed by a scan of every F with
// deg F <= deg Q, which certifies that no decomposition exists.

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "schinzel/constructions/crt.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor/multivariate.hpp"
#include "schinzel/multipoly.hpp"
#include "schinzel/rings/extension_field.hpp"
#include "schinzel/search/engine.hpp"

namespace schinzel {

struct GoldbachOptions {
  bool relaxed_degx = false;  // deg_{x1}(F) <= deg_{x1}(Q) instead of deg F <= deg Q
  std::uint64_t budget = 100000;
  long coeff_bound = 3;      // lambda parameters over Z, Q and k[u]
  unsigned deg_u = 1;
  std::size_t relaxed_extra_degree = 2;  // extra total degree allowed for Q1 when relaxed
};

template <class R>
struct GoldbachResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::optional<MultiPoly<R>> F, G;
  std::string method;  // "closed-form", "binomial-search", "exhaustive"
  std::string table_case;
  std::optional<Monomial> Q_inf, Q1;
  std::optional<typename R::Element> lambda0, lambda1;
  std::uint64_t tested = 0;
  bool relaxed = false;
  std::vector<std::string> notes;
};

/// a + b*x^e: at most one nonconstant term.
template <class R>
bool is_binomial(const MultiPoly<R>& F) {
  std::size_t nonconstant = 0;
  for (const auto& [m, c] : F.terms()) nonconstant += monomial_degree(m) > 0 ? 1 : 0;
  return nonconstant == 1;
}

struct GoldbachCheck {
  bool identity = false;
  bool F_irreducible = false;
  bool G_irreducible = false;
  bool degree_clause = false;
  bool binomial = false;

  bool ok() const { return identity && F_irreducible && G_irreducible && degree_clause; }
};

/// Independent re-check of a decomposition.
template <class R>
GoldbachCheck verify_goldbach(const MultiPoly<R>& Q, const MultiPoly<R>& F, const MultiPoly<R>& G,
                              bool relaxed_degx) {
  GoldbachCheck c;
  c.identity = F + G == Q;
  c.F_irreducible = !F.is_zero() && is_irreducible(F).irreducible;
  c.G_irreducible = !G.is_zero() && is_irreducible(G).irreducible;
  if (!F.is_zero() && !Q.is_zero()) {
    c.degree_clause = relaxed_degx ? *degree_in(F, 0) <= *degree_in(Q, 0)
                                   : *total_degree(F) <= *total_degree(Q);
  }
  c.binomial = is_binomial(F);
  return c;
}

namespace goldbach_detail {

/// An element of R outside {0, 1}, when the table's third case needs one.
template <class R>
std::optional<typename R::Element> element_not_0_1(const R& ring) {
  if constexpr (is_poly_ring_v<R>) {
    return ring.variable();
  } else if constexpr (std::is_same_v<R, ExtensionField>) {
    return ring.generator();
  } else if constexpr (R::is_finite) {
    if (ring.size() > 2) return ring.from_int(2);
    return std::nullopt;
  } else {
    return ring.from_int(2);
  }
}

/// Q = q1*x + q0 in one variable.
template <class R>
std::optional<GoldbachResult<R>> closed_form(const MultiPoly<R>& Q) {
  const R& ring = Q.ring();
  const auto q1 = Q.coeff({1}), q0 = Q.constant_term();
  const auto one = ring.one();
  const auto x = MultiPoly<R>::monomial(ring, 1, {1}, one);
  auto lin = [&](const typename R::Element& a, const typename R::Element& b) {
    return x.scaled(a) + MultiPoly<R>::constant(ring, 1, b);
  };
  GoldbachResult<R> out;
  out.method = "closed-form";
  if (!(q1 == one)) {
    out.table_case = "q1 != 1";
    out.F = lin(one, ring.sub(q0, one));
    out.G = lin(ring.sub(q1, one), one);
  } else if (!(q1 == ring.neg(one))) {
    out.table_case = "q1 != -1";
    out.F = lin(ring.neg(one), ring.sub(q0, one));
    out.G = lin(ring.add(q1, one), one);
  } else {
    const auto r = element_not_0_1(ring);
    if (!r) return std::nullopt;
    out.table_case = "q1 = 1 = -1";
    const auto rq0 = ring.mul(*r, q0);
    out.F = lin(*r, ring.add(rq0, one));
    out.G = lin(ring.add(*r, one), ring.add(ring.add(rq0, q0), one));
  }
  out.status = SearchStatus::Found;
  return out;
}

/// Monomials of total degree <= D in n variables, graded-lex descending.
inline std::vector<Monomial> monomials_desc(std::size_t n, std::size_t D) {
  auto v = crt_detail::monomials_up_to(n, D);
  std::sort(v.begin(), v.end(), GradedLexGreater{});
  return v;
}

template <class R>
bool accepts(const MultiPoly<R>& Q, const MultiPoly<R>& F, const MultiPoly<R>& G, bool relaxed) {
  if (F.is_constant() || G.is_constant()) return false;
  const bool degree_ok = relaxed ? *degree_in(F, 0) <= *degree_in(Q, 0) : *total_degree(F) <= *total_degree(Q);
  return degree_ok && is_irreducible(F).irreducible && is_irreducible(G).irreducible;
}

}  // namespace goldbach_detail

template <class R>
GoldbachResult<R> goldbach_decompose(const MultiPoly<R>& Q, const GoldbachOptions& opt = {}) {
  using namespace goldbach_detail;
  if (Q.is_zero() || Q.is_constant()) throw DomainError("Goldbach decomposition needs a nonconstant Q");
  const R& ring = Q.ring();
  const std::size_t n = Q.nvars();
  const std::size_t deg = *total_degree(Q);
  if (opt.relaxed_degx && n < 2) throw DomainError("the deg_x relaxation needs at least two variables");

  if (n == 1 && deg == 1) {
    if (auto r = closed_form(Q)) {
      if (accepts(Q, *r->F, *r->G, opt.relaxed_degx)) {
        r->relaxed = opt.relaxed_degx;
        return *r;
      }
    }
  }

  GoldbachResult<R> out;
  out.relaxed = opt.relaxed_degx;
  out.method = "binomial-search";

  Monomial q_inf;
  for (const auto& [m, c] : Q.terms()) {
    if (monomial_degree(m) > 0) {
      q_inf = m;  // terms are graded-lex descending
      break;
    }
  }
  out.Q_inf = q_inf;
  const auto qi = Q.coeff(q_inf), q0 = Q.constant_term();

  std::vector<Monomial> q1s;
  for (const auto& m : monomials_desc(n, deg)) {
    if (monomial_degree(m) > 0 && m != q_inf) q1s.push_back(m);
  }
  if (opt.relaxed_degx) {
    const std::size_t degx = *degree_in(Q, 0);
    auto extra = monomials_desc(n, deg + opt.relaxed_extra_degree);
    std::reverse(extra.begin(), extra.end());
    for (const auto& m : extra) {
      if (monomial_degree(m) > deg && m[0] <= degx) q1s.push_back(m);
    }
  }

  SearchConstraints sc;
  sc.coeff_bound = opt.coeff_bound;
  sc.deg_u = opt.deg_u;
  const auto space = coordinate_space(ring, sc);
  search_detail::ShellEnumerator<R> shells(space, 2);
  std::vector<std::size_t> digits(2);
  bool exhausted = false;
  while (out.tested < opt.budget) {
    if (!shells.next(digits)) {
      exhausted = true;
      break;
    }
    const auto& a = space.values[digits[0]];
    const auto& b = space.values[digits[1]];
    const auto l0 = ring.add(ring.sub(ring.one(), q0), ring.mul(a, qi));
    if (ring.is_zero(l0)) continue;
    const auto l1 = ring.add(ring.one(), ring.mul(b, l0));
    if (ring.is_zero(l1)) continue;
    for (const auto& q1 : q1s) {
      if (out.tested >= opt.budget) break;
      ++out.tested;
      const auto M = MultiPoly<R>::constant(ring, n, l0) + MultiPoly<R>::monomial(ring, n, q1, l1);
      auto F = -M;
      auto G = M + Q;
      if (accepts(Q, F, G, opt.relaxed_degx)) {
        out.status = SearchStatus::Found;
        out.F = std::move(F);
        out.G = std::move(G);
        out.Q1 = q1;
        out.lambda0 = l0;
        out.lambda1 = l1;
        return out;
      }
    }
  }

  if constexpr (R::is_finite) {
    if (exhausted && !opt.relaxed_degx) {
      const auto monos = crt_detail::monomials_up_to(n, deg);
      mpz_class total;
      mpz_ui_pow_ui(total.get_mpz_t(), ring.size(), monos.size());
      if (total > mpz_class(static_cast<unsigned long>(kMaxCoordinateValues))) {
        out.notes.push_back("exhaustive scan skipped: " + total.get_str() + " candidates");
        return out;
      }
      out.method = "exhaustive";
      std::optional<MultiPoly<R>> general;
      const std::uint64_t count = total.get_ui();
      for (std::uint64_t idx = 1; idx < count; ++idx) {
        if (out.tested >= opt.budget) return out;
        ++out.tested;
        MultiPoly<R> F(ring, n);
        std::uint64_t rest = idx;
        for (const auto& m : monos) {
          F.add_term(m, ring.element_at(rest % ring.size()));
          rest /= ring.size();
        }
        const auto G = Q - F;
        if (!accepts(Q, F, G, false)) continue;
        if (is_binomial(F)) {
          out.status = SearchStatus::Found;
          out.F = F;
          out.G = G;
          return out;
        }
        if (!general) general = F;
      }
      if (general) {
        out.status = SearchStatus::Found;
        out.F = *general;
        out.G = Q - *general;
        out.notes.push_back("no binomial decomposition; F has " + std::to_string(general->size()) + " terms");
      } else {
        out.status = SearchStatus::ExhaustedNone;
        out.notes.push_back("no F with deg F <= deg Q gives a decomposition");
      }
    }
  }
  return out;
}

}  // namespace schinzel
