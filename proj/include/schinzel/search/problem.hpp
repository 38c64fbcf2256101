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

// Witness-search problems: find M in x1..xn within a degree box such that
// every P_i(x, M) is irreducible in R[x].

#include <cstdint>
#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/multivariate.hpp"
#include "schinzel/multipoly.hpp"

namespace schinzel {

enum class Strategy { Exhaustive, Random };

inline std::string to_string(Strategy s) { return s == Strategy::Exhaustive ? "exhaustive" : "random"; }

struct SearchConstraints {
  Strategy strategy = Strategy::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;  // candidates examined
  long coeff_bound = 3;           // integer coefficients in [-B, B] (Z, Q, Q[u])
  unsigned deg_u = 1;             // u-degree bound of k[u] coefficients
  std::vector<bool> exact_degree;           // per x_j: require deg_{x_j}(M) = d_j
  std::optional<unsigned> deg_u_target;     // require deg_u(M) = delta (char 0) or p*delta
  std::optional<std::pair<Monomial, Monomial>> coprime_pair;  // their coefficients coprime in R
  std::optional<std::vector<Monomial>> support;               // must contain the constant
  bool paper_mode = false;
  std::uint64_t max_witnesses = 0;  // 0: no limit
  unsigned threads = 1;
};

/// Extra acceptance test run on a candidate after the irreducibility checks;
/// returns a rejection reason or nullopt.
template <class R>
using CandidatePredicate = std::function<std::optional<std::string>(
    const std::vector<MultiPoly<R>>& M, const std::vector<MultiPoly<R>>& images)>;

template <class R>
struct CoordinateSpace {
  std::vector<typename R::Element> values;
  std::vector<unsigned> levels;  // nondecreasing

  std::size_t size() const { return values.size(); }
  unsigned max_level() const { return levels.empty() ? 0 : levels.back(); }

  /// Number of values of level <= L.
  std::size_t count_up_to(unsigned L) const {
    return static_cast<std::size_t>(std::upper_bound(levels.begin(), levels.end(), L) -
                                    levels.begin());
  }
};

template <class R>
struct SchinzelProblem {
  R ring;
  VarSet xvars;
  VarSet yvars;
  std::vector<MultiPoly<R>> P;      // in (x1..xn, y1..ym)
  std::vector<std::size_t> degrees;  // d_1..d_n
  SearchConstraints constraints;
  CandidatePredicate<R> extra;
  std::vector<std::string> warnings;
  std::vector<Monomial> support;     // resolved coordinate monomials, constant first
  std::optional<CoordinateSpace<R>> space;  // overrides the ring's default values

  std::size_t n() const { return xvars.size(); }
  std::size_t m() const { return yvars.size(); }
  VarSet all_vars() const { return xvars.concat(yvars); }
};

namespace search_detail {

/// Every monomial of the degree box: constant first, then ascending
/// graded-lex.
inline std::vector<Monomial> box_support(const std::vector<std::size_t>& degrees) {
  std::vector<Monomial> out;
  Monomial m(degrees.size(), 0);
  for (;;) {
    out.push_back(m);
    std::size_t i = 0;
    for (; i < m.size(); ++i) {
      if (m[i] < degrees[i]) {
        ++m[i];
        break;
      }
      m[i] = 0;
    }
    if (i == m.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return GradedLexGreater{}(b, a);
  });
  return out;
}

}  // namespace search_detail

/// Validates the standing hypotheses and resolves the coordinate support.
template <class R>
SchinzelProblem<R> make_problem(const R& ring, VarSet xvars, VarSet yvars,
                                std::vector<MultiPoly<R>> P, std::vector<std::size_t> degrees,
                                SearchConstraints constraints) {
  const std::size_t n = xvars.size(), m = yvars.size();
  if (n == 0) throw DomainError("need at least one x variable");
  if (m == 0) throw DomainError("need at least one y variable");
  if (P.empty()) throw DomainError("need at least one polynomial P_i");
  if (degrees.size() != n) {
    throw DomainError("degree tuple has " + std::to_string(degrees.size()) + " entries, expected " +
                      std::to_string(n));
  }
  for (auto d : degrees) {
    if (d == 0) throw DomainError("degrees must be positive");
  }
  if (constraints.budget == 0) throw DomainError("budget must be at least 1");
  if (constraints.coeff_bound < 1) throw DomainError("coefficient bound must be at least 1");
  if (!constraints.exact_degree.empty() && constraints.exact_degree.size() != n) {
    throw DomainError("exact-degree flags must match the number of x variables");
  }
  (void)xvars.concat(yvars);  // rejects clashing names

  SchinzelProblem<R> prob{ring, std::move(xvars), std::move(yvars), std::move(P),
                          std::move(degrees), std::move(constraints), {}, {}, {}, {}};
  std::size_t max_degx = 0;
  for (std::size_t i = 0; i < prob.P.size(); ++i) {
    const auto& Pi = prob.P[i];
    if (Pi.nvars() != n + m || !(Pi.ring() == ring)) {
      throw RingMismatch("P_" + std::to_string(i + 1) + " does not live in R[x, y]");
    }
    if (Pi.is_zero() || *degree_in_range(Pi, n, n + m) == 0) {
      throw DomainError("P_" + std::to_string(i + 1) + " has degree 0 in y");
    }
    if (!is_irreducible(Pi).irreducible) {
      throw DomainError("P_" + std::to_string(i + 1) + " is not irreducible in R[x, y]");
    }
    max_degx = std::max(max_degx, *degree_in_range(Pi, 0, n));
  }
  std::size_t dsum = 0;
  for (auto d : prob.degrees) dsum += d;
  if (dsum < max_degx + 2) {
    prob.warnings.push_back("degree sum " + std::to_string(dsum) + " is below max deg_x(P_i) + 2 = " +
                            std::to_string(max_degx + 2) + "; witnesses are not guaranteed");
  }

  auto& c = prob.constraints;
  if (c.support) {
    const Monomial zero(n, 0);
    bool has_constant = false;
    for (const auto& mono : *c.support) {
      if (mono.size() != n) throw DomainError("support monomial has the wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        if (mono[j] > prob.degrees[j]) throw DomainError("support monomial lies outside the degree box");
      }
      has_constant = has_constant || mono == zero;
    }
    if (!has_constant) throw DomainError("support must contain the constant monomial");
    prob.support = *c.support;
    std::sort(prob.support.begin(), prob.support.end(),
              [](const Monomial& a, const Monomial& b) { return GradedLexGreater{}(b, a); });
    prob.support.erase(std::unique(prob.support.begin(), prob.support.end()), prob.support.end());
  } else {
    prob.support = search_detail::box_support(prob.degrees);
  }

  if (c.paper_mode) {
    Monomial q1(prob.degrees.begin(), prob.degrees.end());
    // Graded-lex largest box monomial of degree sum - 1.
    Monomial q2 = q1;
    --q2.back();
    c.coprime_pair = std::make_pair(q1, q2);
    if (dsum - 1 <= max_degx) {
      prob.warnings.push_back("paper mode: deg Q2 = " + std::to_string(dsum - 1) +
                              " does not exceed max deg_x(P_i) = " + std::to_string(max_degx));
    }
  }
  if (c.coprime_pair) {
    for (const auto* mono : {&c.coprime_pair->first, &c.coprime_pair->second}) {
      if (std::find(prob.support.begin(), prob.support.end(), *mono) == prob.support.end()) {
        throw DomainError("coprime monomials must belong to the support");
      }
    }
  }
  return prob;
}

}  // namespace schinzel
