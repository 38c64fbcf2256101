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

// Chinese remaindering in k[x1..xn]. Bezout identities s*a + t*b = 1 are
// found by solving the coefficient linear system for s, t of increasing
// total degree, which also covers moduli that are coprime in several
// variables but not comaximal (those are reported as errors).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/multipoly.hpp"

namespace schinzel {

/// Solves A z = b over a field; free unknowns are set to zero.
template <class F>
std::optional<std::vector<typename F::Element>> solve_linear(
    const F& field, std::vector<std::vector<typename F::Element>> A,
    std::vector<typename F::Element> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && field.is_zero(A[p][c])) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    const auto inv = field.inverse(A[r][c]);
    for (auto& v : A[r]) v = field.mul(v, inv);
    b[r] = field.mul(b[r], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || field.is_zero(A[i][c])) continue;
      const auto f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] = field.sub(A[i][j], field.mul(f, A[r][j]));
      b[i] = field.sub(b[i], field.mul(f, b[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!field.is_zero(b[i])) return std::nullopt;
  }
  std::vector<typename F::Element> z(cols, field.zero());
  for (std::size_t i = 0; i < r; ++i) z[pivot_col[i]] = b[i];
  return z;
}

namespace crt_detail {

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t degree) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  for (;;) {
    if (monomial_degree(m) <= degree) out.push_back(m);
    std::size_t i = 0;
    for (; i < nvars; ++i) {
      if (m[i] < degree) {
        ++m[i];
        break;
      }
      m[i] = 0;
    }
    if (i == nvars) break;
  }
  return out;
}

}  // namespace crt_detail

/// s, t with s*a + t*b = 1 and total degrees <= max_degree, if any.
template <class F>
std::optional<std::pair<MultiPoly<F>, MultiPoly<F>>> bezout(const MultiPoly<F>& a,
                                                            const MultiPoly<F>& b,
                                                            std::size_t max_degree) {
  static_assert(F::is_field, "Bezout identities need field coefficients");
  a.check_compatible(b);
  const F& field = a.ring();
  const std::size_t n = a.nvars();
  for (std::size_t e = 0; e <= max_degree; ++e) {
    const auto monos = crt_detail::monomials_up_to(n, e);
    std::map<Monomial, std::size_t> row_of;
    auto row = [&](const Monomial& m) {
      auto [it, inserted] = row_of.emplace(m, row_of.size());
      return it->second;
    };
    row(Monomial(n, 0));
    std::vector<std::vector<std::pair<std::size_t, typename F::Element>>> cols;
    for (const auto* src : {&a, &b}) {
      for (const auto& mono : monos) {
        std::vector<std::pair<std::size_t, typename F::Element>> col;
        for (const auto& [m, c] : src->terms()) {
          Monomial t = m;
          for (std::size_t i = 0; i < n; ++i) t[i] += mono[i];
          col.emplace_back(row(t), c);
        }
        cols.push_back(std::move(col));
      }
    }
    std::vector<std::vector<typename F::Element>> A(row_of.size(),
                                                    std::vector<typename F::Element>(cols.size(), field.zero()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const auto& [i, c] : cols[j]) A[i][j] = c;
    }
    std::vector<typename F::Element> rhs(row_of.size(), field.zero());
    rhs[0] = field.one();
    if (auto z = solve_linear(field, std::move(A), std::move(rhs))) {
      MultiPoly<F> s(field, n), t(field, n);
      for (std::size_t j = 0; j < monos.size(); ++j) {
        s.add_term(monos[j], (*z)[j]);
        t.add_term(monos[j], (*z)[monos.size() + j]);
      }
      return std::make_pair(std::move(s), std::move(t));
    }
  }
  return std::nullopt;
}

/// Default degree cap for Bezout searches.
template <class F>
std::size_t bezout_degree_cap(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  return 2 * (total_degree(a).value_or(0) + total_degree(b).value_or(0)) + 2;
}

/// Throws unless (a) + (b) is the unit ideal, naming the pair.
template <class F>
std::pair<MultiPoly<F>, MultiPoly<F>> require_comaximal(const MultiPoly<F>& a, const MultiPoly<F>& b,
                                                        const std::string& what, const VarSet& vars) {
  const auto g = poly_gcd(a, b);
  if (!g.is_constant()) {
    throw DomainError(what + " are not coprime: gcd(" + to_string(a, vars) + ", " + to_string(b, vars) +
                      ") = " + to_string(g, vars));
  }
  auto st = bezout(a, b, bezout_degree_cap(a, b));
  if (!st) {
    throw DomainError(what + " " + to_string(a, vars) + " and " + to_string(b, vars) +
                      " are coprime but generate a proper ideal");
  }
  return *st;
}

/// U0 with U0 = target_i mod modulus_i for every i, reduced modulo the
/// product of the moduli by graded-lex division.
template <class F>
MultiPoly<F> poly_crt(const std::vector<std::pair<MultiPoly<F>, MultiPoly<F>>>& residues,
                      const VarSet& vars) {
  static_assert(F::is_field, "poly_crt needs field coefficients");
  if (residues.empty()) throw DomainError("poly_crt needs at least one residue");
  const F& field = residues[0].first.ring();
  const std::size_t n = residues[0].first.nvars();
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i].second.is_zero()) throw DomainError("CRT modulus must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      (void)require_comaximal(residues[j].second, residues[i].second,
                              "moduli " + std::to_string(j + 1) + " and " + std::to_string(i + 1), vars);
    }
  }
  auto N = MultiPoly<F>::constant(field, n, field.one());
  for (const auto& [t, w] : residues) N *= w;
  MultiPoly<F> U(field, n);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const auto& [target, w] = residues[i];
    const auto Ni = *divide_exact(N, w);
    auto st = bezout(Ni, w, bezout_degree_cap(Ni, w));
    if (!st) throw DomainError("modulus " + std::to_string(i + 1) + " is not comaximal with the others");
    U += target * Ni * st->first;
  }
  return divide_with_remainder(U, N).second;
}

}  // namespace schinzel
