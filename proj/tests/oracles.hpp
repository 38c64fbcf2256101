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

// Independent reference computations for tests. Nothing here calls the
// library's factoring code; oracles work on dense coefficient arrays.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

/// Dense polynomial over F_p in two variables, index i*(dy+1)+j for x^i y^j.
struct Box {
  unsigned p, dx, dy;
  std::size_t cells() const { return (dx + 1) * (dy + 1); }
  std::uint64_t count() const {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < cells(); ++i) c *= p;
    return c;
  }
  std::vector<unsigned> decode(std::uint64_t idx) const {
    std::vector<unsigned> c(cells());
    for (auto& v : c) {
      v = static_cast<unsigned>(idx % p);
      idx /= p;
    }
    return c;
  }
  std::uint64_t encode(const std::vector<unsigned>& c) const {
    std::uint64_t idx = 0;
    for (std::size_t k = c.size(); k-- > 0;) idx = idx * p + c[k];
    return idx;
  }
  unsigned total_degree(const std::vector<unsigned>& c) const {
    unsigned d = 0;
    for (unsigned i = 0; i <= dx; ++i)
      for (unsigned j = 0; j <= dy; ++j)
        if (c[i * (dy + 1) + j] != 0) d = std::max(d, i + j);
    return d;
  }
};

/// Indices of every reducible polynomial in the box: all products g*h of
/// nonconstant g, h whose product stays inside the box.
inline std::set<std::uint64_t> reducible_set(const Box& b) {
  std::set<std::uint64_t> out;
  const auto n = b.count();
  std::vector<std::vector<unsigned>> polys;
  std::vector<unsigned> degx, degy;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto c = b.decode(i);
    if (b.total_degree(c) == 0) continue;
    unsigned ex = 0, ey = 0;
    for (unsigned x = 0; x <= b.dx; ++x)
      for (unsigned y = 0; y <= b.dy; ++y)
        if (c[x * (b.dy + 1) + y]) ex = std::max(ex, x), ey = std::max(ey, y);
    polys.push_back(std::move(c));
    degx.push_back(ex);
    degy.push_back(ey);
  }
  for (std::size_t a = 0; a < polys.size(); ++a) {
    for (std::size_t c = a; c < polys.size(); ++c) {
      if (degx[a] + degx[c] > b.dx || degy[a] + degy[c] > b.dy) continue;
      std::vector<unsigned> prod(b.cells(), 0);
      for (unsigned i = 0; i <= degx[a]; ++i)
        for (unsigned j = 0; j <= degy[a]; ++j) {
          const unsigned u = polys[a][i * (b.dy + 1) + j];
          if (!u) continue;
          for (unsigned k = 0; k <= degx[c]; ++k)
            for (unsigned l = 0; l <= degy[c]; ++l) {
              auto& cell = prod[(i + k) * (b.dy + 1) + (j + l)];
              cell = (cell + u * polys[c][k * (b.dy + 1) + l]) % b.p;
            }
        }
      out.insert(b.encode(prod));
    }
  }
  return out;
}

/// Irreducible monic univariate polynomials over F_p of exact degree d,
/// by sieving products (coefficients low to high).
inline std::vector<std::vector<unsigned>> irreducible_univariate(unsigned p, unsigned d) {
  const Box b{p, d, 0};
  const auto red = reducible_set(b);
  std::vector<std::vector<unsigned>> out;
  for (std::uint64_t i = 0; i < b.count(); ++i) {
    auto c = b.decode(i);
    if (c[d] != 1 || red.count(i)) continue;
    out.push_back(c);
  }
  return out;
}

/// Integer polynomial (low to high) of degree <= 3 with content 1:
/// irreducible over Z iff it has no rational root p/q (p | a0, q | lead).
inline bool z_irreducible_deg_le3(const std::vector<long>& f) {
  std::size_t d = f.size();
  while (d > 0 && f[d - 1] == 0) --d;
  if (d <= 1) return false;  // constant
  long g = 0;
  for (std::size_t i = 0; i < d; ++i) g = std::gcd(g, std::labs(f[i]));
  if (g != 1) return false;
  if (d == 2) return true;
  if (f[0] == 0) return false;  // x divides f
  auto divisors = [](long v) {
    std::vector<long> out;
    v = std::labs(v);
    for (long k = 1; k <= v; ++k)
      if (v % k == 0) out.push_back(k);
    return out;
  };
  for (long num : divisors(f[0])) {
    for (long den : divisors(f[d - 1])) {
      for (long sign : {1L, -1L}) {
        // den^(d-1) * f(num/den) == 0 ?
        mpz_class acc = 0;
        mpz_class np = 1;
        for (std::size_t i = 0; i < d; ++i) {
          mpz_class dp = 1;
          for (std::size_t k = i; k + 1 < d; ++k) dp *= den;
          acc += mpz_class(f[i]) * np * dp;
          np *= sign * num;
        }
        if (acc == 0) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
