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

// Factorization in Z[x]: squarefree decomposition, factorization modulo a
// small prime, Hensel lifting past a Mignotte-style coefficient bound and
// naive subset recombination (subsets of at most kMaxSubsetSize factors).

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/univariate_ff.hpp"
#include "schinzel/rings/prime_field.hpp"
#include "schinzel/rings/upoly.hpp"

namespace schinzel {

/// Dense integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

struct ZFactorization {
  mpz_class unit;  // content times the sign of the leading coefficient
  std::vector<std::pair<ZPoly, unsigned>> factors;
  std::string trace;
};

namespace zpoly {

inline constexpr unsigned kMaxSubsetSize = 6;

inline void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline ZPoly primitive(const ZPoly& a) {
  if (a.empty()) return a;
  mpz_class c = content(a);
  if (sgn(a.back()) < 0) c = -c;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

/// a / b over Z when exact.
inline std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DomainError("division by the zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  for (const auto& c : r) {
    if (sgn(c) != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

inline ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const mpz_class lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= b.back();
    for (std::size_t j = 0; j < b.size(); ++j) r[j + shift] -= lr * b[j];
    trim(r);
    if (!r.empty()) r = primitive(r);
  }
  return r;
}

/// gcd of the primitive parts, primitive with positive leading coefficient.
inline ZPoly gcd(ZPoly a, ZPoly b) {
  a = primitive(a);
  b = primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive(r);
  }
  return primitive(a);
}

/// Yun's algorithm; f primitive with positive leading coefficient.
inline std::vector<std::pair<ZPoly, unsigned>> squarefree(const ZPoly& f) {
  std::vector<std::pair<ZPoly, unsigned>> out;
  if (f.size() <= 1) return out;
  ZPoly g = gcd(f, derivative(f));
  ZPoly w = *divide_exact(f, g);
  unsigned i = 1;
  while (w.size() > 1) {
    ZPoly y = gcd(w, g);
    ZPoly z = *divide_exact(w, y);
    if (z.size() > 1) out.emplace_back(std::move(z), i);
    ++i;
    g = *divide_exact(g, y);
    w = std::move(y);
  }
  return out;
}

inline upoly::Poly<PrimeField> reduce(const PrimeField& fp, const ZPoly& a) {
  upoly::Poly<PrimeField> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp.from_integer(a[i]);
  upoly::trim(fp, r);
  return r;
}

inline ZPoly lift_coefficients(const upoly::Poly<PrimeField>& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

inline ZPoly mod(const ZPoly& a, const mpz_class& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

inline ZPoly symmetric_mod(const ZPoly& a, const mpz_class& m) {
  ZPoly r = mod(a, m);
  const mpz_class half = m / 2;
  for (auto& c : r) {
    if (c > half) c -= m;
  }
  trim(r);
  return r;
}

/// Lifts F = g*h (mod p), g and h monic and coprime mod p, F monic modulo
/// p^k, to the same factorization modulo p^k.
inline std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& F, ZPoly g, ZPoly h,
                                                 std::uint64_t p, unsigned k) {
  const PrimeField fp(p);
  const auto gbar = reduce(fp, g), hbar = reduce(fp, h);
  auto [one, s, t] = upoly::xgcd(fp, gbar, hbar);
  if (one.size() != 1) throw DomainError("Hensel lifting needs coprime factors");
  mpz_class pj = static_cast<unsigned long>(p);
  for (unsigned j = 1; j < k; ++j) {
    const mpz_class pj1 = pj * static_cast<unsigned long>(p);
    ZPoly e = mod(F, pj1);
    const ZPoly gh = mul(g, h);
    e.resize(std::max(e.size(), gh.size()), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    e = mod(e, pj1);
    ZPoly scaled(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!mpz_divisible_p(e[i].get_mpz_t(), pj.get_mpz_t())) {
        throw DomainError("Hensel lifting invariant violated");
      }
      mpz_divexact(scaled[i].get_mpz_t(), e[i].get_mpz_t(), pj.get_mpz_t());
    }
    const auto ebar = reduce(fp, scaled);
    const auto dg = upoly::rem(fp, upoly::mul(fp, t, ebar), gbar);
    const auto dh = upoly::rem(fp, upoly::mul(fp, s, ebar), hbar);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pj * static_cast<unsigned long>(dg[i]);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += pj * static_cast<unsigned long>(dh[i]);
    g = mod(g, pj1);
    h = mod(h, pj1);
    pj = pj1;
  }
  return {std::move(g), std::move(h)};
}

inline std::vector<ZPoly> hensel_lift_all(const ZPoly& F, const std::vector<ZPoly>& factors,
                                          std::uint64_t p, unsigned k, const mpz_class& pk) {
  if (factors.size() == 1) return {mod(F, pk)};
  const PrimeField fp(p);
  const std::size_t mid = factors.size() / 2;
  std::vector<ZPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(mid));
  std::vector<ZPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(mid), factors.end());
  auto product_mod_p = [&](const std::vector<ZPoly>& fs) {
    upoly::Poly<PrimeField> acc{1};
    for (const auto& f : fs) acc = upoly::mul(fp, acc, reduce(fp, f));
    return lift_coefficients(acc);
  };
  auto [G, H] = hensel_lift_pair(F, product_mod_p(left), product_mod_p(right), p, k);
  auto out = hensel_lift_all(G, left, p, k, pk);
  auto rest = hensel_lift_all(H, right, p, k, pk);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

inline mpz_class coefficient_bound(const ZPoly& f) {
  mpz_class sumsq = 0;
  for (const auto& c : f) sumsq += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
  norm += 1;
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, f.size() - 1);
  return two_n * norm * abs(f.back());
}

/// Factors a squarefree primitive f with positive leading coefficient and
/// degree >= 1 into irreducibles.
inline std::vector<ZPoly> factor_squarefree(const ZPoly& f, std::string& trace) {
  if (f.size() <= 2) return {f};

  // Pick the prime (among the first few admissible ones) giving the fewest
  // modular factors.
  std::optional<std::uint64_t> best_p;
  std::vector<upoly::Poly<PrimeField>> best_factors;
  unsigned admissible = 0;
  for (std::uint64_t p = 3; admissible < 5 && p < 2000; p += 2) {
    if (mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 25) == 0) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    const PrimeField fp(p);
    const auto fbar = reduce(fp, f);
    if (upoly::gcd(fp, fbar, upoly::derivative(fp, fbar)).size() != 1) continue;
    ++admissible;
    auto fac = factor_univariate_ff(fp, fbar, p);
    if (!best_p || fac.factors.size() < best_factors.size()) {
      best_p = p;
      best_factors.clear();
      for (auto& [g, m] : fac.factors) best_factors.push_back(std::move(g));
    }
    if (best_factors.size() == 1) break;
  }
  if (!best_p) throw DomainError("no admissible prime for modular factorization");
  const std::uint64_t p = *best_p;
  if (best_factors.size() == 1) {
    trace = "zassenhaus p=" + std::to_string(p) + " irreducible mod p";
    return {f};
  }

  const mpz_class bound = 2 * coefficient_bound(f) + 1;
  unsigned k = 1;
  mpz_class pk = static_cast<unsigned long>(p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  trace = "zassenhaus p=" + std::to_string(p) + " k=" + std::to_string(k) +
          " modular-factors=" + std::to_string(best_factors.size());

  const PrimeField fp(p);
  mpz_class lc_inv;
  const mpz_class lc = f.back();
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly monic_f(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) monic_f[i] = f[i] * lc_inv;
  monic_f = mod(monic_f, pk);
  std::vector<ZPoly> modular;
  for (const auto& g : best_factors) modular.push_back(lift_coefficients(g));
  std::vector<ZPoly> lifted = hensel_lift_all(monic_f, modular, p, k, pk);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  for (unsigned s = 1; 2 * s <= lifted.size();) {
    if (s > kMaxSubsetSize) {
      throw BudgetExceeded("Zassenhaus recombination needs subsets larger than " +
                           std::to_string(kMaxSubsetSize));
    }
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = mod(mul(cand, lifted[i]), pk);
      cand = primitive(symmetric_mod(cand, pk));
      if (cand.size() > 1) {
        if (auto q = divide_exact(rest, cand)) {
          result.push_back(cand);
          rest = std::move(*q);
          for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos-- > 0) {
        if (idx[pos] < lifted.size() - s + pos) break;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(primitive(rest));
  return result;
}

inline bool less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace zpoly

/// Complete factorization in Z[x]: content (with sign) split off, primitive
/// part factored into irreducibles with positive leading coefficients.
inline ZFactorization factor_univariate_integers(const ZPoly& input) {
  ZPoly f = input;
  zpoly::trim(f);
  if (f.empty()) throw DomainError("cannot factor the zero polynomial");
  ZFactorization result;
  result.unit = zpoly::content(f);
  if (sgn(f.back()) < 0) result.unit = -result.unit;
  const ZPoly prim = zpoly::primitive(f);
  std::vector<std::string> traces;
  for (auto& [part, mult] : zpoly::squarefree(prim)) {
    std::string trace;
    for (auto& g : zpoly::factor_squarefree(part, trace)) result.factors.emplace_back(std::move(g), mult);
    if (!trace.empty()) traces.push_back(trace);
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return zpoly::less(a.first, b.first);
    return a.second < b.second;
  });
  for (const auto& t : traces) {
    if (!result.trace.empty()) result.trace += "; ";
    result.trace += t;
  }
  return result;
}

}  // namespace schinzel
