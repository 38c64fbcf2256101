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

// Rational functions U/V with prescribed reducible fibres. With
// W = w_1*...*w_t and U0 = a_i*V (mod w_i) from CRT, every
// U = U0 + M*W satisfies U - a_i*V = w_i*(p_i + M*W/w_i) and
// U - a0*V = p_0 + M*W, so the problem becomes a witness search for
// P_i = p_i + B_i*y with B_0 = W and B_i = W/w_i.

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

template <class F>
struct SpectrumSpec {
  F field;
  VarSet vars;
  std::vector<typename F::Element> S;  // a_1..a_t
  typename F::Element a0;
  MultiPoly<F> V;
  std::vector<MultiPoly<F>> w;         // w_1..w_t; w_0 = 1 is implicit
  std::vector<std::size_t> degrees;    // d_1..d_n
  // Set when F is an extension F_{p^m} = k(a0) of k = F_p: S, V and w must
  // lie over F_p and the search draws M's coefficients from F_p.
  bool base_subfield = false;
};

template <class F>
struct SpectrumResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  MultiPoly<F> U0;
  std::vector<MultiPoly<F>> p;  // p_0..p_t
  std::vector<MultiPoly<F>> B;  // B_0..B_t
  unsigned bumps = 0;           // times W was added to U0
  std::optional<MultiPoly<F>> M, U;
  std::vector<MultiPoly<F>> H;  // H_0..H_t with H_0 = U - a0*V
  SearchReport<F> search;
  std::vector<std::string> warnings;
};

struct SpectrumCheck {
  std::vector<bool> a;          // conclusion (a) per i = 1..t
  bool b = false;
  bool c = false;
  bool h0_irreducible = false;  // U - a0*V irreducible over k(a0)
  std::vector<std::optional<bool>> reducible;  // U - a_i*V reducible, where the claim applies
  std::vector<std::string> failures;

  bool ok() const {
    for (bool v : a) {
      if (!v) return false;
    }
    for (const auto& r : reducible) {
      if (r && !*r) return false;
    }
    return b && c && h0_irreducible;
  }
};

namespace spectrum_detail {

template <class F>
bool over_prime_subfield(const MultiPoly<F>& f) {
  if constexpr (std::is_same_v<F, ExtensionField>) {
    for (const auto& [m, c] : f.terms()) {
      if (c.size() > 1) return false;
    }
  }
  return true;
}

template <class F>
MultiPoly<F> product(const F& field, std::size_t n, const std::vector<MultiPoly<F>>& fs) {
  auto out = MultiPoly<F>::constant(field, n, field.one());
  for (const auto& f : fs) out *= f;
  return out;
}

template <class F>
void validate(const SpectrumSpec<F>& spec) {
  const std::size_t n = spec.vars.size();
  const F& k = spec.field;
  if (n == 0) throw DomainError("need at least one variable");
  if (spec.degrees.size() != n) throw DomainError("degree tuple must have one entry per variable");
  if (spec.V.is_zero()) throw DomainError("V must be nonzero");
  if (spec.w.size() != spec.S.size()) {
    throw DomainError("need one w_i per element of S (got " + std::to_string(spec.w.size()) + " and " +
                      std::to_string(spec.S.size()) + ")");
  }
  for (std::size_t i = 0; i < spec.S.size(); ++i) {
    if (spec.S[i] == spec.a0) throw DomainError("a0 = " + k.to_string(spec.a0) + " lies in S");
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.S[i] == spec.S[j]) throw DomainError("S repeats " + k.to_string(spec.S[i]));
    }
  }
  if (spec.V.nvars() != n) throw RingMismatch("V has the wrong number of variables");
  for (std::size_t i = 0; i < spec.w.size(); ++i) {
    const auto& wi = spec.w[i];
    const std::string name = "w_" + std::to_string(i + 1);
    if (wi.nvars() != n) throw RingMismatch(name + " has the wrong number of variables");
    if (wi.is_zero()) throw DomainError(name + " must be nonzero");
    const auto g = poly_gcd(wi, spec.V);
    if (!g.is_constant()) {
      throw DomainError(name + " and V are not coprime: gcd = " + to_string(g, spec.vars));
    }
    for (std::size_t j = 0; j < i; ++j) {
      (void)require_comaximal(spec.w[j], wi, "w_" + std::to_string(j + 1) + " and " + name, spec.vars);
    }
  }
  if (spec.base_subfield) {
    auto in_base = [&](const typename F::Element& c) {
      return over_prime_subfield(MultiPoly<F>::constant(k, 1, c));
    };
    for (const auto& a : spec.S) {
      if (!in_base(a)) throw DomainError("S must lie in the prime field");
    }
    if (in_base(spec.a0)) throw DomainError("a0 lies in the prime field; drop the extension");
    if (!over_prime_subfield(spec.V)) throw DomainError("V must have prime-field coefficients");
    for (const auto& wi : spec.w) {
      if (!over_prime_subfield(wi)) throw DomainError("w_i must have prime-field coefficients");
    }
  }
}

}  // namespace spectrum_detail

/// Re-checks conclusions (a), (b), (c) for U by division and factorization.
template <class F>
SpectrumCheck verify_spectrum(const SpectrumSpec<F>& spec, const MultiPoly<F>& U) {
  const F& k = spec.field;
  const std::size_t n = spec.vars.size();
  SpectrumCheck out;
  const auto deg_V = *total_degree(spec.V);
  for (std::size_t i = 0; i < spec.S.size(); ++i) {
    const auto Fi = U - spec.V.scaled(spec.S[i]);
    const std::string tag = "(a) i=" + std::to_string(i + 1) + ": ";
    bool ok = false;
    if (auto H = divide_exact(Fi, spec.w[i])) {
      if (H->is_zero() || !is_irreducible(*H).irreducible) {
        out.failures.push_back(tag + "H_i is not irreducible");
      } else if (divide_exact(spec.w[i], *H)) {
        out.failures.push_back(tag + "H_i divides w_i");
      } else {
        ok = true;
      }
    } else {
      out.failures.push_back(tag + "w_i does not divide U - a_i V");
    }
    out.a.push_back(ok);

    const auto deg_w = *total_degree(spec.w[i]);
    std::optional<bool> claim;
    if (deg_w > 0 && !U.is_zero() && degree_in(U, 0).value_or(0) == spec.degrees[0] &&
        spec.degrees[0] > std::max(deg_V, deg_w)) {
      claim = Fi.is_zero() || !is_irreducible(Fi).irreducible;
      if (!*claim) out.failures.push_back("U - a_i V irreducible for i=" + std::to_string(i + 1));
    }
    out.reducible.push_back(claim);
  }
  const auto F0 = U - spec.V.scaled(spec.a0);
  const std::size_t deg_U = U.is_zero() ? 0 : *total_degree(U);
  out.b = !F0.is_zero() && *total_degree(F0) == std::max(deg_U, deg_V);
  if (!out.b) out.failures.push_back("(b) deg(U - a0 V) != max(deg U, deg V)");
  out.c = !U.is_zero();
  for (std::size_t j = 0; j < n && out.c; ++j) out.c = *degree_in(U, j) == spec.degrees[j];
  if (!out.c) out.failures.push_back("(c) partial degrees of U differ from d");
  out.h0_irreducible = !F0.is_zero() && is_irreducible(F0).irreducible;
  if (!out.h0_irreducible) out.failures.push_back("U - a0 V is not irreducible over " + k.name());
  return out;
}

template <class F>
SpectrumResult<F> spectrum_construct(const SpectrumSpec<F>& spec, SearchConstraints constraints) {
  static_assert(F::is_field, "spectrum construction needs a field");
  using namespace spectrum_detail;
  spectrum_detail::validate(spec);
  const F& k = spec.field;
  const std::size_t n = spec.vars.size(), t = spec.S.size();
  SpectrumResult<F> out{SearchStatus::BudgetExhausted, MultiPoly<F>(k, n), {}, {}, 0, {}, {}, {}, {}, {}};
  if (n < 2) out.warnings.push_back("fewer than two variables: existence is not guaranteed");

  const auto W = product(k, n, spec.w);
  for (std::size_t j = 0; j < n; ++j) {
    const auto dw = *degree_in(W, j);
    if (spec.degrees[j] <= dw) {
      throw DomainError("d_" + std::to_string(j + 1) + " = " + std::to_string(spec.degrees[j]) +
                        " must exceed deg_" + spec.vars[j] + "(w_1...w_t) = " + std::to_string(dw));
    }
  }

  if (t > 0) {
    std::vector<std::pair<MultiPoly<F>, MultiPoly<F>>> residues;
    for (std::size_t i = 0; i < t; ++i) residues.emplace_back(spec.V.scaled(spec.S[i]), spec.w[i]);
    out.U0 = poly_crt(residues, spec.vars);
  }
  auto cofactors = [&] {
    out.p.assign(1, out.U0 - spec.V.scaled(spec.a0));
    for (std::size_t i = 0; i < t; ++i) {
      auto q = divide_exact(out.U0 - spec.V.scaled(spec.S[i]), spec.w[i]);
      if (!q) throw Error("CRT seed misses residue " + std::to_string(i + 1));
      out.p.push_back(std::move(*q));
    }
  };
  cofactors();
  for (;;) {
    bool has_zero = false;
    for (const auto& pi : out.p) has_zero = has_zero || pi.is_zero();
    if (!has_zero) break;
    if (++out.bumps > 4) throw Error("could not make every cofactor p_i nonzero");
    out.U0 += W;
    cofactors();
  }

  out.B.push_back(W);
  for (std::size_t i = 0; i < t; ++i) out.B.push_back(*divide_exact(W, spec.w[i]));

  const VarSet yv(std::vector<std::string>{"y"});
  std::vector<MultiPoly<F>> P;
  for (std::size_t i = 0; i <= t; ++i) {
    const auto g = poly_gcd(out.p[i], out.B[i]);
    if (!g.is_constant()) {
      throw DomainError("p_" + std::to_string(i) + " and B_" + std::to_string(i) +
                        " share the factor " + to_string(g, spec.vars));
    }
    auto Pi = extend_vars(out.p[i], n + 1);
    Monomial ym(n + 1, 0);
    ym[n] = 1;
    Pi += extend_vars(out.B[i], n + 1) * MultiPoly<F>::monomial(k, n + 1, ym, k.one());
    P.push_back(std::move(Pi));
  }

  std::vector<std::size_t> box(n);
  for (std::size_t j = 0; j < n; ++j) box[j] = spec.degrees[j] - *degree_in(W, j);
  constraints.exact_degree.assign(n, true);
  if (constraints.max_witnesses == 0) constraints.max_witnesses = 1;
  auto prob = make_problem(k, spec.vars, yv, std::move(P), box, constraints);
  if constexpr (std::is_same_v<F, ExtensionField>) {
    if (spec.base_subfield) {
      CoordinateSpace<F> sub;
      for (std::uint64_t v = 0; v < k.prime(); ++v) {
        sub.values.push_back(k.from_prime_field(v));
        sub.levels.push_back(0);
      }
      prob.space = std::move(sub);
    }
  }

  const auto U0 = out.U0;
  const auto deg_V = *total_degree(spec.V);
  prob.extra = [&spec, U0, W, deg_V, n, t](const std::vector<MultiPoly<F>>& M,
                                           const std::vector<MultiPoly<F>>& images)
      -> std::optional<std::string> {
    const auto U = U0 + M[0] * W;
    for (std::size_t j = 0; j < n; ++j) {
      if (*degree_in(U, j) != spec.degrees[j]) return std::string("spectrum_degree_c");
    }
    if (*total_degree(images[0]) != std::max(*total_degree(U), deg_V)) {
      return std::string("spectrum_degree_b");
    }
    for (std::size_t i = 1; i <= t; ++i) {
      if (divide_exact(spec.w[i - 1], images[i])) return std::string("cofactor_divides_w");
    }
    return std::nullopt;
  };

  out.warnings.insert(out.warnings.end(), prob.warnings.begin(), prob.warnings.end());
  out.search = schinzel_search(prob);
  out.status = out.search.status;
  if (!out.search.witnesses.empty()) {
    const auto& wit = out.search.witnesses.front();
    out.M = wit.M[0];
    out.U = U0 + wit.M[0] * W;
    out.H = wit.images;
  }
  return out;
}

}  // namespace schinzel
